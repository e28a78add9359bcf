#include "pjrl/geometry.hpp"

#include <cmath>
#include <sstream>

namespace pjrl {

AlgebraicValue scale_value(const AlgebraicValue& v, const Rational& c) {
    if (c == 0) throw std::invalid_argument("scale_value by zero");
    if (v.is_exact()) return AlgebraicValue(v.exact() / c);
    Rational lo = v.lo() / c, hi = v.hi() / c;
    if (c < 0) std::swap(lo, hi);
    if (v.is_boxed()) return AlgebraicValue::box(lo, hi);
    // alpha/c is a root of p(c t), which stays squarefree and rational-root-free.
    std::vector<Rational> coeffs = v.defining().coeffs();
    Rational power(1);
    for (auto& a : coeffs) {
        a *= power;
        power *= c;
    }
    return AlgebraicValue(UniPoly(std::move(coeffs)), lo, hi);
}

ProjectivePoint ProjectivePoint::normalized() const {
    const AlgebraicValue* anchor = nullptr;
    if (z.sign() != 0)
        anchor = &z;
    else if (y.sign() != 0)
        anchor = &y;
    else if (x.sign() != 0)
        anchor = &x;
    else
        throw std::invalid_argument("zero projective triple");
    if (!anchor->is_exact()) throw std::invalid_argument("normalization anchor is irrational");
    const Rational c = anchor->exact();
    if (c == 1) return *this;
    return {scale_value(x, c), scale_value(y, c), scale_value(z, c)};
}

namespace {

// 2 = z, 1 = y, 0 = x; the scale-invariant normalization anchor.
int anchor_index(const ProjectivePoint& p) {
    if (p.z.sign() != 0) return 2;
    if (p.y.sign() != 0) return 1;
    if (p.x.sign() != 0) return 0;
    throw std::invalid_argument("zero projective triple");
}

RatInterval tight_interval(AlgebraicValue v) {
    v.refine_below(Rational(1, Integer(1) << 80));
    return v.interval();
}

}  // namespace

bool ProjectivePoint::same_point(const ProjectivePoint& other) const {
    const int ia = anchor_index(*this);
    if (ia != anchor_index(other)) return false;
    const auto coord = [](const ProjectivePoint& p, int i) -> const AlgebraicValue& {
        return i == 2 ? p.z : (i == 1 ? p.y : p.x);
    };
    if (coord(*this, ia).is_exact() && coord(other, ia).is_exact()) {
        const ProjectivePoint a = normalized();
        const ProjectivePoint b = other.normalized();
        return a.x.same_value(b.x) && a.y.same_value(b.y) && a.z.same_value(b.z);
    }
    // Irrational anchor: proportionality via interval cross products. Nonzero
    // cross products are certified; equality is then an interval check.
    const std::array<RatInterval, 3> a{tight_interval(x), tight_interval(y), tight_interval(z)};
    const std::array<RatInterval, 3> b{tight_interval(other.x), tight_interval(other.y), tight_interval(other.z)};
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            const RatInterval cross = a[i] * b[j] - a[j] * b[i];
            if (!cross.contains_zero()) return false;
        }
    }
    return true;
}

std::string ProjectivePoint::str() const {
    const auto one = [](const AlgebraicValue& v) {
        if (v.is_exact()) return rational_str(v.exact());
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.12g", v.to_double());
        return std::string(buf);
    };
    return "(" + one(x) + ":" + one(y) + ":" + one(z) + ")";
}

std::array<double, 3> ProjectivePoint::to_doubles() const { return {x.to_double(), y.to_double(), z.to_double()}; }

SpherePoint gnomonic_lift(const ProjectivePoint& p) {
    // Exact triples are canonicalized first so the lift is exactly scale invariant.
    const std::array<double, 3> v = p.all_exact() ? p.normalized().to_doubles() : p.to_doubles();
    const double norm = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    if (norm == 0) throw std::invalid_argument("zero projective triple");
    double X = v[0] / norm, Y = v[1] / norm, Z = v[2] / norm;
    constexpr double eps = 1e-12;
    bool flip = false;
    if (Z < -eps)
        flip = true;
    else if (std::abs(Z) <= eps) {
        if (X < -eps)
            flip = true;
        else if (std::abs(X) <= eps && Y < 0)
            flip = true;
    }
    if (flip) {
        X = -X;
        Y = -Y;
        Z = -Z;
    }
    return {X, Y, Z};
}

std::optional<PlanePoint> gnomonic_project(const SpherePoint& sp, PlanePoint* direction) {
    if (sp.Z > 1e-12) return PlanePoint{sp.X / sp.Z, sp.Y / sp.Z};
    if (direction) *direction = {sp.X, sp.Y};
    return std::nullopt;
}

}  // namespace pjrl
