#pragma once

#include "pjrl/poly.hpp"

#include <vector>

namespace pjrl {

struct Ideal {
    std::vector<MultiPoly> generators;
};

struct GrobnerBasis {
    std::vector<MultiPoly> elements;  // monic, sorted by ascending leading monomial
    MonomialOrder order;
    bool reduced = false;
};

/// Full normal form of f modulo the basis: no term of the result is divisible
/// by any leading term of the basis.
MultiPoly reduce(const MultiPoly& f, std::span<const MultiPoly> basis, const MonomialOrder& order);
MultiPoly reduce(const MultiPoly& f, const GrobnerBasis& basis);

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g, const MonomialOrder& order);

/// Buchberger with the normal pair-selection strategy and the coprime-LT and
/// chain elimination criteria; the result is the unique reduced basis.
GrobnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order);
GrobnerBasis buchberger(std::vector<MultiPoly> generators, const MonomialOrder& order);

bool ideal_membership(const MultiPoly& f, const GrobnerBasis& basis);

}  // namespace pjrl
