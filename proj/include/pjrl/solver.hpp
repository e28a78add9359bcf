#pragma once

#include "pjrl/groebner.hpp"
#include "pjrl/pencil.hpp"
#include "pjrl/unipoly.hpp"

#include <complex>

namespace pjrl {

struct IsolatedRoot {
    AlgebraicValue value;
    int multiplicity = 1;
};

/// All real roots of p, ascending. Rational roots come back exact; irrational
/// ones as Sturm-isolated intervals refined below `width`, carrying the
/// rational-root-free squarefree factor they satisfy.
std::vector<IsolatedRoot> real_roots(const UniPoly& p, const Rational& width = Rational(1, 1000000000000LL));

struct NotZeroDimensional : std::runtime_error {
    explicit NotZeroDimensional(std::vector<MultiPoly> gb)
        : std::runtime_error("system is not zero-dimensional"), basis(std::move(gb)) {}
    std::vector<MultiPoly> basis;
};

/// Real points of a zero-dimensional system, each coordinate aligned with the
/// system's variable order. Lex Gröbner triangularization with certified
/// back-substitution. Throws NotZeroDimensional; an inconsistent system
/// yields an empty list.
std::vector<std::vector<AlgebraicValue>> solve_zero_dim(const std::vector<MultiPoly>& system);

struct SweepPoint {
    Rational k;
    std::vector<std::complex<double>> roots;  // (x, y) = (re, im)
    bool degree_drop = false;
};

/// Numeric roots of d + k*n over the grid (companion-matrix eigenvalues with
/// a Newton polish; residuals < 1e-8).
std::vector<SweepPoint> sweep_conventional(const RationalFunction& G, const std::vector<Rational>& k_grid);

struct ComplementarySweepPoint {
    Rational k;
    std::vector<std::pair<double, double>> points;  // (z, y) = (1/x, y/x)
    bool blow_up = false;                           // some |x| < 1e-9 was omitted
};

std::vector<ComplementarySweepPoint> sweep_complementary(const std::vector<SweepPoint>& sweep);

}  // namespace pjrl
