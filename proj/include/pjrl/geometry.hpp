#pragma once

#include "pjrl/unipoly.hpp"

#include <array>
#include <optional>

namespace pjrl {

/// A point of the real projective plane with exact or certified-algebraic
/// homogeneous coordinates (x : y : z).
struct ProjectivePoint {
    AlgebraicValue x, y, z;

    ProjectivePoint() = default;
    ProjectivePoint(AlgebraicValue x_, AlgebraicValue y_, AlgebraicValue z_)
        : x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}
    ProjectivePoint(Rational x_, Rational y_, Rational z_)
        : x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}

    bool all_exact() const { return x.is_exact() && y.is_exact() && z.is_exact(); }

    /// Scales so the last nonzero coordinate in priority (z, y, x) becomes 1.
    /// The anchor coordinate must be exact (always the case for points built
    /// patch-wise, whose anchor is literally 0 or 1).
    ProjectivePoint normalized() const;

    /// Projective equality (compares normalized forms).
    bool same_point(const ProjectivePoint& other) const;

    bool at_infinity() const { return z.sign() == 0; }

    std::string str() const;  // "(x:y:z)", exact coordinates as rationals
    std::array<double, 3> to_doubles() const;
};

/// Divides an algebraic value by a nonzero rational, keeping certification.
AlgebraicValue scale_value(const AlgebraicValue& v, const Rational& c);

/// A point on the closed upper unit semi-sphere; the canonical model of
/// P^2(R) under gnomonic identification.
struct SpherePoint {
    double X = 0, Y = 0, Z = 1;
    bool operator==(const SpherePoint&) const = default;
};

/// Central projection of a projective point onto the semi-sphere:
/// +-(x,y,z)/|(x,y,z)| with the sign fixed so Z >= 0; on the equator the
/// representative with X > 0 (or X = 0 and Y > 0) is chosen.
SpherePoint gnomonic_lift(const ProjectivePoint& p);

struct PlanePoint {
    double x = 0, y = 0;
};

/// Projects back onto the z = 1 plane; equatorial points (Z <= 1e-12) have no
/// image and return nullopt together with their direction in `direction`.
std::optional<PlanePoint> gnomonic_project(const SpherePoint& sp, PlanePoint* direction = nullptr);

}  // namespace pjrl
