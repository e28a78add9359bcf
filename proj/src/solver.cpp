#include "pjrl/solver.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>

namespace pjrl {

// ----------------------------------------------------------- univariate roots

namespace {

std::vector<Integer> positive_divisors(Integer v) {
    v = abs_int(v);
    std::vector<Integer> divs;
    if (v == 0) return divs;
    for (Integer i = 1; i * i <= v; ++i) {
        if (v % i != 0) continue;
        divs.push_back(i);
        if (i * i != v) divs.push_back(v / i);
    }
    return divs;
}

// Extracts all rational roots of a squarefree polynomial, deflating as it goes.
std::vector<Rational> extract_rational_roots(UniPoly& p) {
    std::vector<Rational> roots;
    while (!p.is_zero() && p.degree() >= 1 && p.coeff(0) == 0) {
        roots.emplace_back(0);
        std::vector<Rational> c(p.coeffs().begin() + 1, p.coeffs().end());
        p = UniPoly(std::move(c));
    }
    if (p.degree() < 1) return roots;

    const UniPoly prim = p.primitive();
    const Integer a0 = numer(prim.coeff(0));
    const Integer an = numer(prim.leading());
    // Divisor enumeration is only worthwhile for modest coefficients.
    if (abs_int(a0) > Integer("1000000000000") || abs_int(an) > Integer("1000000000000")) return roots;

    for (const Integer& pnum : positive_divisors(a0)) {
        for (const Integer& pden : positive_divisors(an)) {
            for (int sgn : {1, -1}) {
                const Rational cand(sgn * pnum, pden);
                while (p.degree() >= 1 && p.eval(cand) == 0) {
                    roots.push_back(cand);
                    p = p.divmod(UniPoly({-cand, Rational(1)})).first;
                }
            }
        }
    }
    return roots;
}

// Sturm bisection on a squarefree polynomial with no rational roots.
void isolate_irrational(const UniPoly& g, const Rational& width, std::vector<AlgebraicValue>& out) {
    if (g.degree() < 1) return;
    const auto seq = sturm_sequence(g);
    const Rational bound = g.root_bound();
    struct Span {
        Rational lo, hi;
        int count;
    };
    std::vector<Span> work;
    const int total = sign_variations(seq, -bound) - sign_variations(seq, bound);
    if (total > 0) work.push_back({-bound, bound, total});
    while (!work.empty()) {
        Span s = work.back();
        work.pop_back();
        if (s.count == 1) {
            AlgebraicValue v(g, s.lo, s.hi);
            v.refine_below(width);
            out.push_back(std::move(v));
            continue;
        }
        const Rational mid = (s.lo + s.hi) / 2;  // never a root: g has no rational roots
        const int vmid = sign_variations(seq, mid);
        const int left = sign_variations(seq, s.lo) - vmid;
        const int right = vmid - sign_variations(seq, s.hi);
        if (left > 0) work.push_back({s.lo, mid, left});
        if (right > 0) work.push_back({mid, s.hi, right});
    }
}

Rational value_key(const AlgebraicValue& v) { return v.is_exact() ? v.exact() : (v.lo() + v.hi()) / 2; }

}  // namespace

std::vector<IsolatedRoot> real_roots(const UniPoly& p, const Rational& width) {
    if (p.is_zero()) throw std::invalid_argument("real_roots of the zero polynomial");
    std::vector<IsolatedRoot> out;
    for (const auto& [factor, mult] : p.squarefree_decomposition()) {
        UniPoly rest = factor;
        for (const auto& r : extract_rational_roots(rest)) out.push_back({AlgebraicValue(r), mult});
        std::vector<AlgebraicValue> irr;
        isolate_irrational(rest, width, irr);
        for (auto& v : irr) out.push_back({std::move(v), mult});
    }
    std::sort(out.begin(), out.end(),
              [](const IsolatedRoot& a, const IsolatedRoot& b) { return value_key(a.value) < value_key(b.value); });
    return out;
}

// -------------------------------------------------------- zero-dim elimination

namespace {

const Rational kTightWidth = Rational(1, Integer(1) << 140);
const Rational kBoxZeroTol = Rational(1, Integer(1) << 116);  // ~1e-35

struct LevelContext {
    const VariableSet* vars;
    std::size_t level;                          // variable index being solved
    std::vector<std::optional<AlgebraicValue>>* assignment;  // indices > level filled
};

// Indices of assigned suffix variables that are non-exact.
std::vector<std::size_t> interval_vars(const LevelContext& ctx) {
    std::vector<std::size_t> out;
    for (std::size_t i = ctx.level + 1; i < ctx.vars->size(); ++i)
        if ((*ctx.assignment)[i] && !(*ctx.assignment)[i]->is_exact()) out.push_back(i);
    return out;
}

// Substitutes every exact suffix assignment into p.
MultiPoly substitute_exacts(const MultiPoly& p, const LevelContext& ctx) {
    MultiPoly r = p;
    for (std::size_t i = ctx.level + 1; i < ctx.vars->size(); ++i) {
        const auto& a = (*ctx.assignment)[i];
        if (a && a->is_exact()) r = r.substitute(i, a->exact());
    }
    return r;
}

// Certified zero test for a univariate expression c evaluated at the algebraic
// suffix value alpha (single interval variable): c(alpha) = 0 iff gcd(c, D)
// keeps a root inside alpha's isolating interval.
bool is_zero_at(const UniPoly& c, const AlgebraicValue& alpha) {
    if (c.is_zero()) return true;
    if (c.degree() == 0) return false;
    if (alpha.is_boxed()) {
        const RatInterval v = eval_interval(c, alpha.interval());
        return v.contains_zero() && v.width() < kBoxZeroTol;
    }
    const UniPoly g = UniPoly::gcd(c, alpha.defining());
    if (g.degree() < 1) return false;
    return count_real_roots(g, alpha.lo(), alpha.hi()) > 0 || g.eval(alpha.lo()) == 0 || g.eval(alpha.hi()) == 0;
}

// Interval coefficients of p viewed as a polynomial in the level variable,
// with exact suffix values already substituted.
std::vector<RatInterval> interval_coefficients(const MultiPoly& p, const LevelContext& ctx) {
    std::vector<RatInterval> coeffs(static_cast<std::size_t>(std::max(p.degree_in(ctx.level), 0)) + 1,
                                    RatInterval(Rational(0)));
    for (const auto& [m, c] : p.terms()) {
        RatInterval t{c, c};
        for (std::size_t i = ctx.level + 1; i < ctx.vars->size(); ++i) {
            if (m.exps[i] == 0) continue;
            t = t * pow_interval((*ctx.assignment)[i]->interval(), m.exps[i]);
        }
        const auto e = static_cast<std::size_t>(m.exps[ctx.level]);
        coeffs[e] = coeffs[e] + t;
    }
    return coeffs;
}

// Coefficient of level^e as a univariate polynomial in the single interval
// variable `iv` (all other suffix vars exact and already substituted).
UniPoly coefficient_poly(const MultiPoly& p, const LevelContext& ctx, std::size_t iv, int e) {
    MultiPoly c(p.vars());
    for (const auto& [m, coef] : p.terms()) {
        if (m.exps[ctx.level] != e) continue;
        Monomial nm = m;
        nm.exps[ctx.level] = 0;
        c.add_term(nm, coef);
    }
    return UniPoly::from_multipoly(c, iv);
}

RatInterval eval_ipoly(const std::vector<RatInterval>& coeffs, const RatInterval& x) {
    RatInterval v(Rational(0));
    for (std::size_t i = coeffs.size(); i-- > 0;) v = v * x + coeffs[i];
    return v;
}

struct ClassifiedPoly {
    MultiPoly substituted;            // exacts substituted
    std::vector<RatInterval> coeffs;  // interval coefficients in the level variable
    std::vector<bool> coeff_zero;     // certified-zero flags
    int degree = -1;                  // certified degree (-1: vanishes identically)
};

ClassifiedPoly classify(const MultiPoly& p, const LevelContext& ctx) {
    ClassifiedPoly out;
    out.substituted = substitute_exacts(p, ctx);
    const auto ivars = interval_vars(ctx);
    out.coeffs = interval_coefficients(out.substituted, ctx);
    out.coeff_zero.assign(out.coeffs.size(), false);
    for (std::size_t e = 0; e < out.coeffs.size(); ++e) {
        RatInterval& c = out.coeffs[e];
        if (c.is_zero()) {
            out.coeff_zero[e] = true;
            continue;
        }
        if (!c.contains_zero()) continue;
        if (ivars.size() == 1) {
            const UniPoly cp = coefficient_poly(out.substituted, ctx, ivars[0], static_cast<int>(e));
            if (is_zero_at(cp, *(*ctx.assignment)[ivars[0]])) {
                out.coeff_zero[e] = true;
                c = RatInterval(Rational(0));
                continue;
            }
            // Nonzero at alpha: tighten until the interval shows it.
            AlgebraicValue& alpha = *(*ctx.assignment)[ivars[0]];
            for (int round = 0; round < 300 && eval_interval(cp, alpha.interval()).contains_zero(); ++round)
                alpha.refine();
            c = eval_interval(cp, alpha.interval());
            if (c.contains_zero())
                throw std::runtime_error("solve_zero_dim: cannot certify coefficient sign");
        } else {
            // Multiple interval variables: tolerance-based call on a tight box.
            if (c.width() < kBoxZeroTol) {
                out.coeff_zero[e] = true;
                c = RatInterval(Rational(0));
            } else {
                throw std::runtime_error("solve_zero_dim: ambiguous coefficient with several interval variables");
            }
        }
    }
    for (std::size_t e = out.coeffs.size(); e-- > 0;) {
        if (!out.coeff_zero[e]) {
            out.degree = static_cast<int>(e);
            break;
        }
    }
    return out;
}

bool poly_only_from_level(const MultiPoly& p, std::size_t level) {
    for (const auto& [m, c] : p.terms())
        for (std::size_t i = 0; i < level; ++i)
            if (m.exps[i] != 0) return false;
    return true;
}

class Eliminator {
public:
    Eliminator(std::vector<MultiPoly> gb, const VariableSet& vars) : gb_(std::move(gb)), vars_(vars) {}

    std::vector<std::vector<AlgebraicValue>> run() {
        std::vector<std::optional<AlgebraicValue>> assignment(vars_.size());
        solve_level(vars_.size() - 1, assignment);
        return std::move(points_);
    }

private:
    void solve_level(std::size_t level, std::vector<std::optional<AlgebraicValue>>& assignment) {
        LevelContext ctx{&vars_, level, &assignment};
        std::vector<const MultiPoly*> polys;
        for (const auto& g : gb_)
            if (poly_only_from_level(g, level)) polys.push_back(&g);

        std::vector<AlgebraicValue> candidates;
        if (interval_vars(ctx).empty()) {
            if (!exact_candidates(ctx, polys, candidates)) return;
        } else {
            if (!interval_candidates(ctx, polys, candidates)) return;
        }
        for (auto& cand : candidates) {
            assignment[level] = cand;
            if (level == 0)
                emit(assignment);
            else
                solve_level(level - 1, assignment);
            assignment[level].reset();
        }
    }

    // All suffix values exact: reduce to a rational univariate gcd.
    bool exact_candidates(const LevelContext& ctx, const std::vector<const MultiPoly*>& polys,
                          std::vector<AlgebraicValue>& out) {
        UniPoly g;
        bool any = false;
        for (const auto* p : polys) {
            const MultiPoly sub = substitute_exacts(*p, ctx);
            if (sub.is_zero()) continue;
            any = true;
            const UniPoly u = UniPoly::from_multipoly(sub, ctx.level);
            g = g.is_zero() ? u : UniPoly::gcd(g, u);
            if (g.degree() == 0) return false;  // no common root
        }
        if (!any || g.is_zero())
            throw NotZeroDimensional(gb_);  // variable unconstrained on this branch
        if (g.degree() == 0) return false;
        for (auto& r : real_roots(g)) out.push_back(std::move(r.value));
        return true;
    }

    bool interval_candidates(LevelContext& ctx, const std::vector<const MultiPoly*>& polys,
                             std::vector<AlgebraicValue>& out) {
        for (std::size_t i : interval_vars(ctx)) (*ctx.assignment)[i]->refine_below(kTightWidth);

        std::vector<ClassifiedPoly> classified;
        for (const auto* p : polys) classified.push_back(classify(*p, ctx));

        // Prefer a linear equation; otherwise the lowest certified degree >= 1.
        int chosen = -1;
        for (std::size_t i = 0; i < classified.size(); ++i) {
            const int d = classified[i].degree;
            if (d == 0) return false;  // certified-nonzero constant: inconsistent branch
            if (d < 1) continue;
            if (chosen < 0 || d < classified[static_cast<std::size_t>(chosen)].degree)
                chosen = static_cast<int>(i);
        }
        if (chosen < 0) throw NotZeroDimensional(gb_);
        const ClassifiedPoly& cp = classified[static_cast<std::size_t>(chosen)];

        std::vector<AlgebraicValue> candidates;
        if (cp.degree == 1) {
            const RatInterval c0 = cp.coeffs[0];
            const RatInterval c1 = cp.coeffs[1];
            if (c0.is_zero()) {
                candidates.emplace_back(Rational(0));
            } else if (c0.is_point() && c1.is_point()) {
                candidates.emplace_back(-c0.lo / c1.lo);
            } else {
                candidates.push_back(AlgebraicValue::box(-c0 / c1));
            }
        } else {
            bisect_candidates(cp, candidates);
        }

        // Every other level polynomial must also vanish at the candidate.
        for (auto& cand : candidates) {
            bool ok = true;
            for (std::size_t i = 0; i < classified.size() && ok; ++i) {
                if (static_cast<int>(i) == chosen) continue;
                ok = check_vanishes(classified[i], ctx, cand);
            }
            if (ok) out.push_back(std::move(cand));
        }
        return true;
    }

    bool check_vanishes(const ClassifiedPoly& cp, const LevelContext& ctx, AlgebraicValue& cand) {
        if (cp.degree < 0) return true;
        const auto ivars = interval_vars(ctx);
        if (cand.is_exact() && ivars.size() == 1) {
            MultiPoly at = cp.substituted.substitute(ctx.level, cand.exact());
            return is_zero_at(UniPoly::from_multipoly(at, ivars[0]), *(*ctx.assignment)[ivars[0]]);
        }
        cand.refine_below(Rational(1, Integer(1) << 100));
        return eval_ipoly(cp.coeffs, cand.interval()).contains_zero();
    }

    // Sign-change scan for degree >= 2 with interval coefficients.
    void bisect_candidates(const ClassifiedPoly& cp, std::vector<AlgebraicValue>& out) {
        const auto mag = [](const RatInterval& v) {
            return std::max(v.lo < 0 ? -v.lo : v.lo, v.hi < 0 ? -v.hi : v.hi);
        };
        const std::size_t d = static_cast<std::size_t>(cp.degree);
        const RatInterval& lead = cp.coeffs[d];
        const Rational lead_min = lead.lo > 0 ? lead.lo : -lead.hi;
        Rational bound(1);
        for (std::size_t i = 0; i < d; ++i) bound = std::max(bound, mag(cp.coeffs[i]) / lead_min);
        bound += 1;

        const int n = static_cast<int>(d) * 32;
        std::vector<std::pair<Rational, int>> samples;
        for (int i = 0; i <= n; ++i) {
            const Rational t = -bound + (bound * 2) * Rational(i, n);
            const auto s = eval_ipoly(cp.coeffs, RatInterval(t)).sign();
            if (s) samples.emplace_back(t, *s);
        }
        for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
            auto [lo, slo] = samples[i];
            auto [hi, shi] = samples[i + 1];
            if (slo == 0) {
                out.emplace_back(lo);
                continue;
            }
            if (slo * shi >= 0) continue;
            // Bisect to a tight box.
            for (int step = 0; step < 140 && hi - lo > kTightWidth; ++step) {
                const Rational mid = (lo + hi) / 2;
                const auto sm = eval_ipoly(cp.coeffs, RatInterval(mid)).sign();
                if (!sm || *sm == 0) break;
                (*sm == slo ? lo : hi) = mid;
            }
            out.push_back(AlgebraicValue::box(lo, hi));
        }
        if (!samples.empty() && samples.back().second == 0) out.emplace_back(samples.back().first);
    }

    void emit(const std::vector<std::optional<AlgebraicValue>>& assignment) {
        std::vector<AlgebraicValue> point;
        point.reserve(assignment.size());
        for (const auto& a : assignment) point.push_back(*a);
        points_.push_back(std::move(point));
    }

    std::vector<MultiPoly> gb_;
    const VariableSet& vars_;
    std::vector<std::vector<AlgebraicValue>> points_;
};

}  // namespace

std::vector<std::vector<AlgebraicValue>> solve_zero_dim(const std::vector<MultiPoly>& system) {
    if (system.empty()) throw std::invalid_argument("solve_zero_dim: empty system");
    const VariableSet& vars = system[0].vars();
    GrobnerBasis gb = buchberger(system, lex(vars));

    // Inconsistent system: 1 lies in the ideal.
    if (gb.elements.size() == 1 && gb.elements[0].is_constant()) return {};

    const MonomialOrder& order = gb.order;
    for (std::size_t v = 0; v < vars.size(); ++v) {
        bool pure_power = false;
        for (const auto& g : gb.elements) {
            const Monomial lm = g.leading_monomial(order);
            bool pure = lm.exps[v] > 0;
            for (std::size_t i = 0; i < vars.size() && pure; ++i)
                if (i != v && lm.exps[i] != 0) pure = false;
            if (pure) {
                pure_power = true;
                break;
            }
        }
        if (!pure_power) throw NotZeroDimensional(gb.elements);
    }
    return Eliminator(gb.elements, vars).run();
}

// -------------------------------------------------------------- numeric sweep

namespace {

std::vector<std::complex<double>> companion_roots(const UniPoly& p) {
    const int n = p.degree();
    std::vector<std::complex<double>> roots;
    if (n < 1) return roots;
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
    const double lead = to_double(p.leading());
    for (int i = 0; i < n; ++i) companion(i, n - 1) = -to_double(p.coeff(static_cast<std::size_t>(i))) / lead;
    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion);
    const auto vals = solver.eigenvalues();
    const UniPoly dp = p.derivative();
    for (int i = 0; i < n; ++i) {
        std::complex<double> r(vals[i].real(), vals[i].imag());
        // Newton polish to push residuals well under the 1e-8 contract.
        for (int it = 0; it < 4; ++it) {
            const std::complex<double> f = p.eval(r);
            const std::complex<double> df = dp.eval(r);
            if (std::abs(df) < 1e-300) break;
            const std::complex<double> next = r - f / df;
            if (std::abs(p.eval(next)) < std::abs(f)) r = next;
        }
        roots.push_back(r);
    }
    std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return roots;
}

}  // namespace

std::vector<SweepPoint> sweep_conventional(const RationalFunction& G, const std::vector<Rational>& k_grid) {
    const UniPoly d = G.den_uni();
    const UniPoly n = G.num_uni();
    std::vector<SweepPoint> out;
    out.reserve(k_grid.size());
    for (const auto& k : k_grid) {
        const UniPoly p = d + n * k;
        SweepPoint sp;
        sp.k = k;
        sp.degree_drop = p.degree() < d.degree();
        sp.roots = companion_roots(p);
        out.push_back(std::move(sp));
    }
    return out;
}

std::vector<ComplementarySweepPoint> sweep_complementary(const std::vector<SweepPoint>& sweep) {
    std::vector<ComplementarySweepPoint> out;
    out.reserve(sweep.size());
    for (const auto& sp : sweep) {
        ComplementarySweepPoint cp;
        cp.k = sp.k;
        for (const auto& root : sp.roots) {
            const double x = root.real(), y = root.imag();
            if (std::abs(x) < 1e-9) {
                cp.blow_up = true;
                continue;
            }
            cp.points.emplace_back(1.0 / x, y / x);
        }
        out.push_back(std::move(cp));
    }
    return out;
}

}  // namespace pjrl
