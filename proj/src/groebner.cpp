#include "pjrl/groebner.hpp"

#include <algorithm>
#include <set>

namespace pjrl {

MultiPoly reduce(const MultiPoly& f, std::span<const MultiPoly> basis, const MonomialOrder& order) {
    MultiPoly remainder(f.vars());
    MultiPoly p = f;
    while (!p.is_zero()) {
        const auto [lm, lc] = p.leading_term(order);
        bool divided = false;
        for (const auto& b : basis) {
            if (b.is_zero()) continue;
            const auto [blm, blc] = b.leading_term(order);
            if (!blm.divides(lm)) continue;
            MultiPoly factor(p.vars());
            factor.add_term(lm / blm, lc / blc);
            p = p - factor * b;
            divided = true;
            break;
        }
        if (!divided) {
            MultiPoly term(p.vars());
            term.add_term(lm, lc);
            remainder = remainder + term;
            p = p - term;
        }
    }
    return remainder;
}

MultiPoly reduce(const MultiPoly& f, const GrobnerBasis& basis) {
    return reduce(f, basis.elements, basis.order);
}

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g, const MonomialOrder& order) {
    const auto [fm, fc] = f.leading_term(order);
    const auto [gm, gc] = g.leading_term(order);
    const Monomial l = Monomial::lcm(fm, gm);
    MultiPoly uf(f.vars()), ug(g.vars());
    uf.add_term(l / fm, Rational(1) / fc);
    ug.add_term(l / gm, Rational(1) / gc);
    return uf * f - ug * g;
}

namespace {

struct Pair {
    std::size_t i, j;
    Monomial lcm;
};

}  // namespace

GrobnerBasis buchberger(std::vector<MultiPoly> generators, const MonomialOrder& order) {
    std::vector<MultiPoly> g;
    for (auto& p : generators) {
        if (p.is_zero()) continue;
        g.push_back(p.vars() == order.vars() ? std::move(p) : p.lift(order.vars()));
    }
    if (g.empty()) throw std::invalid_argument("buchberger: zero ideal");

    std::vector<Pair> pending;
    std::set<std::pair<std::size_t, std::size_t>> handled;
    auto push_pairs = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i)
            pending.push_back({i, j, Monomial::lcm(g[i].leading_monomial(order), g[j].leading_monomial(order))});
    };
    for (std::size_t j = 0; j < g.size(); ++j) push_pairs(j);

    while (!pending.empty()) {
        // Normal strategy: smallest lcm first.
        auto best = pending.begin();
        for (auto it = std::next(pending.begin()); it != pending.end(); ++it)
            if (order.less(it->lcm, best->lcm)) best = it;
        const Pair pair = *best;
        pending.erase(best);
        handled.insert({pair.i, pair.j});

        const Monomial lmi = g[pair.i].leading_monomial(order);
        const Monomial lmj = g[pair.j].leading_monomial(order);
        // First criterion: coprime leading monomials.
        if (Monomial::coprime(lmi, lmj)) continue;
        // Chain criterion: some g_k divides the lcm and both side pairs are done.
        bool skip = false;
        for (std::size_t k = 0; k < g.size() && !skip; ++k) {
            if (k == pair.i || k == pair.j) continue;
            if (!g[k].leading_monomial(order).divides(pair.lcm)) continue;
            const auto key_ik = std::minmax(pair.i, k);
            const auto key_jk = std::minmax(pair.j, k);
            if (handled.contains({key_ik.first, key_ik.second}) && handled.contains({key_jk.first, key_jk.second}))
                skip = true;
        }
        if (skip) continue;

        const MultiPoly s = reduce(s_polynomial(g[pair.i], g[pair.j], order), g, order);
        if (!s.is_zero()) {
            g.push_back(s.monic(order));
            push_pairs(g.size() - 1);
        }
    }

    // Minimalize: drop elements whose leading term another one divides.
    std::vector<MultiPoly> minimal;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const Monomial lm = g[i].leading_monomial(order);
        bool redundant = false;
        for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
            if (i == j) continue;
            const Monomial other = g[j].leading_monomial(order);
            if (other.divides(lm) && (other != lm || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(g[i]);
    }

    // Interreduce to the unique reduced basis.
    std::vector<MultiPoly> reduced = minimal;
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < reduced.size(); ++i) {
            std::vector<MultiPoly> others;
            for (std::size_t j = 0; j < reduced.size(); ++j)
                if (j != i) others.push_back(reduced[j]);
            MultiPoly nf = reduce(reduced[i], others, order).monic(order);
            if (nf != reduced[i]) {
                reduced[i] = std::move(nf);
                changed = true;
            }
        }
    }
    std::erase_if(reduced, [](const MultiPoly& p) { return p.is_zero(); });
    std::sort(reduced.begin(), reduced.end(), [&](const MultiPoly& a, const MultiPoly& b) {
        return order.less(a.leading_monomial(order), b.leading_monomial(order));
    });
    return {std::move(reduced), order, true};
}

GrobnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order) {
    return buchberger(ideal.generators, order);
}

bool ideal_membership(const MultiPoly& f, const GrobnerBasis& basis) {
    MultiPoly g = f.vars() == basis.order.vars() ? f : f.lift(basis.order.vars());
    return reduce(g, basis).is_zero();
}

}  // namespace pjrl
