#include "pjrl/pjrl.hpp"

#include <algorithm>

namespace pjrl {

namespace {

const std::vector<std::string> kPlaneBlock = {"x", "y"};

// Divides out the largest power of `var` common to all terms (var != 0 branch).
MultiPoly strip_variable_content(const MultiPoly& p, std::size_t var) {
    if (p.is_zero()) return p;
    int min_exp = -1;
    for (const auto& [m, c] : p.terms()) min_exp = min_exp < 0 ? m.exps[var] : std::min(min_exp, m.exps[var]);
    if (min_exp <= 0) return p;
    MultiPoly out(p.vars());
    for (const auto& [m, c] : p.terms()) {
        Monomial nm = m;
        nm.exps[var] -= min_exp;
        out.add_term(nm, c);
    }
    return out;
}

std::string_view patch_var_name(Patch patch) {
    switch (patch) {
        case Patch::xy: return "z";
        case Patch::zy: return "x";
        case Patch::xz: return "y";
    }
    throw std::logic_error("bad patch");
}

std::vector<MultiPoly> set_patch_var(const std::vector<MultiPoly>& polys, Patch patch) {
    if (polys.empty()) return {};
    const std::size_t pv = polys[0].vars().index_of(patch_var_name(patch));
    const VariableSet target = polys[0].vars().with_removed(pv);
    std::vector<MultiPoly> out;
    for (const auto& p : polys) {
        MultiPoly q = p.substitute(pv, Rational(1)).restrict_to(target);
        if (!q.is_zero()) out.push_back(std::move(q));
    }
    return out;
}

}  // namespace

HomogeneousSystem projective_closure(const PencilPair& pair) {
    HomogeneousSystem sys{.polys = {}, .source_basis = buchberger(std::vector<MultiPoly>{pair.q, pair.r},
                                                                  grevlex(pencil_vars()))};
    for (const auto& g : sys.source_basis.elements) sys.polys.push_back(homogenize(g, kPlaneBlock, "z"));
    return sys;
}

std::vector<MultiPoly> naive_homogenization(const PencilPair& pair) {
    return {homogenize(pair.q, kPlaneBlock, "z"), homogenize(pair.r, kPlaneBlock, "z")};
}

std::vector<MultiPoly> specialize(const HomogeneousSystem& sys, const ParameterValue& k, bool recompute) {
    const std::size_t kd = projective_vars().index_of("k_d");
    const std::size_t kn = projective_vars().index_of("k_n");
    std::vector<MultiPoly> out;
    for (const auto& g : sys.polys) {
        MultiPoly p = g.substitute(kd, k.k_d).substitute(kn, k.k_n).restrict_to(slice_vars());
        if (!p.is_zero()) out.push_back(std::move(p));
    }
    if (out.empty()) throw std::runtime_error("degenerate specialization");
    if (recompute) out = buchberger(std::move(out), grevlex(slice_vars())).elements;
    return out;
}

std::vector<MultiPoly> specialize_symbolic(const HomogeneousSystem& sys) {
    const VariableSet all6({"x", "y", "z", "k_d", "k_n", "lambda"});
    const MultiPoly lambda = MultiPoly::variable(all6, "lambda");
    const std::size_t li = symbolic_vars().index_of("lambda");
    std::vector<MultiPoly> gens;
    for (const auto& g : sys.polys) {
        MultiPoly p = g.lift(all6)
                          .substitute(all6.index_of("k_d"), Rational(1))
                          .substitute(all6.index_of("k_n"), lambda)
                          .restrict_to(symbolic_vars());
        if (!p.is_zero()) gens.push_back(std::move(p));
    }
    if (gens.empty()) throw std::runtime_error("degenerate specialization");
    // The intermediary locus assumes lambda != 0, so lambda content is divided
    // out; each division can unlock further basis reductions.
    for (int round = 0; round < 5; ++round) {
        bool stripped = false;
        for (auto& g : gens) {
            MultiPoly s = strip_variable_content(g, li);
            if (!(s == g)) {
                g = std::move(s);
                stripped = true;
            }
        }
        std::vector<MultiPoly> next = buchberger(gens, grevlex(symbolic_vars())).elements;
        if (!stripped && next == gens) break;
        gens = std::move(next);
    }
    return gens;
}

LocusSlice solve_slice(const std::vector<MultiPoly>& specialized, const ParameterValue& k) {
    if (specialized.empty()) throw std::invalid_argument("empty specialized system");
    LocusSlice slice;
    slice.k = k;
    slice.kind = k.k_n == 0 ? SliceKind::initial : (k.k_d == 0 ? SliceKind::terminal : SliceKind::intermediary);

    const std::size_t xi = 0, zi = 2;

    const auto push_unique = [](std::vector<ProjectivePoint>& list, ProjectivePoint p) {
        for (const auto& q : list)
            if (q.same_point(p)) return;
        list.push_back(std::move(p));
    };

    // Finite patch: z = 1.
    {
        const VariableSet xy({"x", "y"});
        std::vector<MultiPoly> polys;
        for (const auto& g : specialized) {
            MultiPoly p = g.substitute(zi, Rational(1)).restrict_to(xy);
            if (!p.is_zero()) polys.push_back(std::move(p));
        }
        if (polys.empty()) {
            slice.components.push_back({Patch::xy, {}});
        } else {
            try {
                for (auto& sol : solve_zero_dim(polys))
                    push_unique(slice.finite_points,
                                ProjectivePoint(std::move(sol[0]), std::move(sol[1]), AlgebraicValue(Rational(1))));
            } catch (const NotZeroDimensional& e) {
                slice.components.push_back({Patch::xy, e.basis});
            }
        }
    }

    // Infinite plane, first sub-patch: z = 0, x = 1, points (1 : y : 0).
    std::vector<MultiPoly> at_infinity;
    for (const auto& g : specialized) {
        MultiPoly p = g.substitute(zi, Rational(0));
        if (!p.is_zero()) at_infinity.push_back(std::move(p));
    }
    {
        const VariableSet yonly({"y"});
        std::vector<MultiPoly> polys;
        bool trivial = at_infinity.empty();
        for (const auto& g : at_infinity) {
            MultiPoly p = g.substitute(xi, Rational(1)).restrict_to(yonly);
            if (!p.is_zero()) polys.push_back(std::move(p));
        }
        if (trivial || polys.empty()) {
            if (!trivial) slice.components.push_back({Patch::zy, {}});
        } else {
            try {
                for (auto& sol : solve_zero_dim(polys))
                    push_unique(slice.infinite_points, ProjectivePoint(AlgebraicValue(Rational(1)), std::move(sol[0]),
                                                                       AlgebraicValue(Rational(0))));
            } catch (const NotZeroDimensional& e) {
                slice.components.push_back({Patch::zy, e.basis});
            }
        }
    }

    // Second sub-patch: the single candidate (0 : 1 : 0).
    {
        bool vanishes = true;
        const std::array<Rational, 3> pt{Rational(0), Rational(1), Rational(0)};
        for (const auto& g : specialized)
            if (g.eval(pt) != 0) {
                vanishes = false;
                break;
            }
        if (vanishes) push_unique(slice.infinite_points, ProjectivePoint(Rational(0), Rational(1), Rational(0)));
    }

    slice.inconsistent =
        slice.finite_points.empty() && slice.infinite_points.empty() && slice.components.empty();
    return slice;
}

AffineView affine_view(const HomogeneousSystem& sys, Patch patch, const ParameterValue& k) {
    return {patch, set_patch_var(specialize(sys, k), patch)};
}

AffineView affine_view_symbolic(const HomogeneousSystem& sys, Patch patch) {
    return {patch, set_patch_var(specialize_symbolic(sys), patch)};
}

ProjectivePoint swap_patch_coords(const ProjectivePoint& p, Patch patch) {
    ProjectivePoint q = p;
    switch (patch) {
        case Patch::xy: break;
        case Patch::zy: std::swap(q.x, q.z); break;
        case Patch::xz: std::swap(q.y, q.z); break;
    }
    try {
        return q.normalized();
    } catch (const std::invalid_argument&) {
        return q;  // irrational anchor: leave the chart representative as is
    }
}

std::vector<AsymptoteDirection> asymptote_directions(const LocusSlice& slice, Patch patch) {
    std::vector<AsymptoteDirection> out;
    const auto consider = [&](const ProjectivePoint& p) {
        const ProjectivePoint q = swap_patch_coords(p, patch);
        if (q.z.sign() != 0) return;
        AsymptoteDirection dir;
        if (q.x.sign() == 0) {
            dir.vertical = true;
        } else {
            if (!q.x.is_exact()) throw std::runtime_error("asymptote with irrational direction anchor");
            dir.slope = scale_value(q.y, q.x.exact());
        }
        out.push_back(std::move(dir));
    };
    for (const auto& p : slice.finite_points) consider(p);
    for (const auto& p : slice.infinite_points) consider(p);
    return out;
}

}  // namespace pjrl
