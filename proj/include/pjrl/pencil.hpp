#pragma once

#include "pjrl/poly.hpp"
#include "pjrl/unipoly.hpp"

namespace pjrl {

/// Coprime n(s)/d(s) with monic denominator.
struct RationalFunction {
    MultiPoly num;  // n(s)
    MultiPoly den;  // d(s)

    UniPoly num_uni() const;
    UniPoly den_uni() const;
};

struct NonCoprimeError : std::runtime_error {
    NonCoprimeError(std::string factor_str)
        : std::runtime_error("numerator and denominator share the factor " + factor_str),
          common_factor(std::move(factor_str)) {}
    std::string common_factor;
};

/// The real pencil k_d*(q_d, r_d) + k_n*(q_n, r_n) in variables x > y > k_d > k_n.
struct PencilPair {
    MultiPoly q, r;                  // in (x, y, k_d, k_n)
    MultiPoly q_d, r_d, q_n, r_n;    // in (x, y)
    bool swapped = false;            // k_d/k_n roles exchanged (improper plant)
};

/// Variable sets used throughout the pipeline.
const VariableSet& plane_vars();        // x > y
const VariableSet& pencil_vars();       // x > y > k_d > k_n
const VariableSet& projective_vars();   // x > y > z > k_d > k_n
const VariableSet& slice_vars();        // x > y > z
const VariableSet& symbolic_vars();     // x > y > z > lambda
const VariableSet& s_var();             // s

bool coprimality_check(const MultiPoly& n, const MultiPoly& d);
/// Monic gcd of two univariate polynomials in s.
MultiPoly univariate_gcd(const MultiPoly& a, const MultiPoly& b);

/// Real and imaginary parts of p(x + iy) for a univariate p(s).
std::pair<MultiPoly, MultiPoly> complex_split(const MultiPoly& p);

/// Builds q, r of the pencil. Throws NonCoprimeError; swaps k roles when
/// deg n > deg d and records the swap.
PencilPair build_pencil(const RationalFunction& G);

}  // namespace pjrl
