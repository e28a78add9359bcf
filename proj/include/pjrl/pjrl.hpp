#pragma once

#include "pjrl/geometry.hpp"
#include "pjrl/groebner.hpp"
#include "pjrl/pencil.hpp"
#include "pjrl/solver.hpp"

namespace pjrl {

/// Homogeneous defining system of the projective closure W, in (x,y,z,k_d,k_n).
/// Each polynomial is homogeneous in the (x,y,z) block and degree-1
/// homogeneous in (k_d,k_n).
struct HomogeneousSystem {
    std::vector<MultiPoly> polys;
    GrobnerBasis source_basis;  // grevlex basis of <q,r> before homogenization
};

/// A point of P^1(R): the gain k = k_n/k_d. Canonical form has k_d = 1 for
/// finite k and (k_n,k_d) = (1,0) for k = infinity.
struct ParameterValue {
    Rational k_n{0}, k_d{1};

    static ParameterValue finite(Rational k) { return {std::move(k), Rational(1)}; }
    static ParameterValue infinity() { return {Rational(1), Rational(0)}; }

    bool is_infinite() const { return k_d == 0; }
    bool operator==(const ParameterValue&) const = default;
};

enum class SliceKind { initial, terminal, intermediary };
enum class Patch { xy, zy, xz };  // z = 1, x = 1, y = 1

/// Positive-dimensional part of a slice patch, kept symbolic.
struct SymbolicComponent {
    Patch patch;
    std::vector<MultiPoly> polys;
};

/// The solution set W_k of the specialized system for one parameter value.
struct LocusSlice {
    ParameterValue k;
    SliceKind kind = SliceKind::intermediary;
    std::vector<ProjectivePoint> finite_points;    // z != 0
    std::vector<ProjectivePoint> infinite_points;  // z = 0
    std::vector<SymbolicComponent> components;     // positive-dimensional parts
    bool inconsistent = false;                     // no solutions anywhere
};

/// One affine chart of the specialized system (patch variable set to 1).
struct AffineView {
    Patch patch;
    std::vector<MultiPoly> polys;
};

/// Gröbner basis of <q,r> under grevlex x > y > k_d > k_n, then each element
/// homogenized over the {x,y} block with z. Defines the projective closure.
HomogeneousSystem projective_closure(const PencilPair& pair);

/// Homogenization of {q, r} alone, without the Gröbner step. Its variety can
/// pick up spurious points at infinity that the closure excludes.
std::vector<MultiPoly> naive_homogenization(const PencilPair& pair);

/// Substitutes (k_n, k_d), drops zero polynomials, restricts to (x,y,z).
/// With recompute set, the Gröbner basis of the specialized set is taken
/// again under grevlex x > y > z. Throws std::runtime_error when every
/// polynomial vanishes identically.
std::vector<MultiPoly> specialize(const HomogeneousSystem& sys, const ParameterValue& k, bool recompute = true);

/// Specialization with k_n = lambda, k_d = 1 where lambda stays a symbol of
/// lowest precedence: the result lives in (x,y,z,lambda).
std::vector<MultiPoly> specialize_symbolic(const HomogeneousSystem& sys);

/// Patch-wise real solution set of a specialized system in (x,y,z):
/// z = 1 (finite points), then z = 0 with x = 1 and with x = 0, y = 1.
LocusSlice solve_slice(const std::vector<MultiPoly>& specialized, const ParameterValue& k);

/// Specializes then sets the patch variable to 1.
AffineView affine_view(const HomogeneousSystem& sys, Patch patch, const ParameterValue& k);
AffineView affine_view_symbolic(const HomogeneousSystem& sys, Patch patch);

/// Chart change: patch zy swaps x and z, patch xz swaps y and z. The xy patch
/// is the identity.
ProjectivePoint swap_patch_coords(const ProjectivePoint& p, Patch patch);

/// An asymptote of the chosen affine patch: an infinite slice point read as a
/// slope, or the vertical direction (0:1:0).
struct AsymptoteDirection {
    bool vertical = false;
    AlgebraicValue slope;  // meaningful when !vertical
};

std::vector<AsymptoteDirection> asymptote_directions(const LocusSlice& slice, Patch patch);

}  // namespace pjrl
