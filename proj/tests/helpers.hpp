#pragma once

#include "pjrl/polyparse.hpp"

#include <random>

namespace pjrl::testing {

inline MultiPoly P(const VariableSet& vars, std::string_view text) { return parse_poly(text, vars); }

/// Equality up to a nonzero scalar factor.
inline bool scalar_multiple(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    if (a.term_count() != b.term_count()) return false;
    const auto& fa = *a.terms().begin();
    const auto it = b.terms().find(fa.first);
    if (it == b.terms().end()) return false;
    return a * (it->second / fa.second) == b;
}

/// Set equality up to per-element scalar factors.
inline bool same_poly_set(const std::vector<MultiPoly>& as, const std::vector<MultiPoly>& bs) {
    if (as.size() != bs.size()) return false;
    std::vector<bool> used(bs.size(), false);
    for (const auto& a : as) {
        bool found = false;
        for (std::size_t i = 0; i < bs.size(); ++i) {
            if (used[i] || !scalar_multiple(a, bs[i])) continue;
            used[i] = true;
            found = true;
            break;
        }
        if (!found) return false;
    }
    return true;
}

inline Rational random_rational(std::mt19937& rng, int num_range = 9, int den_range = 4) {
    std::uniform_int_distribution<int> num(-num_range, num_range);
    std::uniform_int_distribution<int> den(1, den_range);
    return Rational(num(rng), den(rng));
}

inline MultiPoly random_poly(std::mt19937& rng, const VariableSet& vars, int max_degree, int terms) {
    MultiPoly p(vars);
    std::uniform_int_distribution<int> exp(0, max_degree);
    for (int t = 0; t < terms; ++t) {
        Monomial m(vars.size());
        int budget = max_degree;
        for (auto& e : m.exps) {
            e = std::min(exp(rng), budget);
            budget -= e;
        }
        p.add_term(m, random_rational(rng));
    }
    return p;
}

}  // namespace pjrl::testing
