#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "pjrl/pjrl.hpp"
#include "pjrl/transfer.hpp"

using namespace pjrl;
using pjrl::testing::P;
using pjrl::testing::same_poly_set;
using pjrl::testing::scalar_multiple;

namespace {

HomogeneousSystem closure_of(std::string_view plant) {
    return projective_closure(build_pencil(parse_transfer_function(plant)));
}

ProjectivePoint pt(long long x, long long y, long long z) {
    return ProjectivePoint(Rational(x), Rational(y), Rational(z));
}

bool same_point_set(const std::vector<ProjectivePoint>& got, const std::vector<ProjectivePoint>& want) {
    if (got.size() != want.size()) return false;
    std::vector<bool> used(want.size(), false);
    for (const auto& g : got) {
        bool found = false;
        for (std::size_t i = 0; i < want.size(); ++i) {
            if (used[i] || !want[i].same_point(g)) continue;
            used[i] = true;
            found = true;
            break;
        }
        if (!found) return false;
    }
    return true;
}

LocusSlice endpoint(const HomogeneousSystem& sys, const ParameterValue& k) {
    return solve_slice(specialize(sys, k), k);
}

MultiPoly strip_y(const MultiPoly& p) {
    const std::size_t yi = p.vars().index_of("y");
    int min_exp = 1 << 20;
    for (const auto& [m, c] : p.terms()) min_exp = std::min(min_exp, m.exps[yi]);
    if (min_exp == 0) return p;
    MultiPoly out(p.vars());
    for (const auto& [m, c] : p.terms()) {
        Monomial nm = m;
        nm.exps[yi] -= min_exp;
        out.add_term(nm, c);
    }
    return out;
}

bool contains_scalar_multiple(const std::vector<MultiPoly>& polys, const MultiPoly& target) {
    for (const auto& p : polys)
        if (scalar_multiple(strip_y(p), target)) return true;
    return false;
}

const AlgebraicValue kSqrt3 = [] {
    return AlgebraicValue(UniPoly({Rational(-3), Rational(0), Rational(1)}), Rational(1), Rational(2));
}();

}  // namespace

TEST_CASE("closure of s/(s^2+1) matches equations 13-16") {
    const HomogeneousSystem sys = closure_of("s/(s^2+1)");
    const VariableSet& v = projective_vars();
    CHECK(same_poly_set(sys.polys, {
                                       P(v, "2*x*y*k_d + y*z*k_n"),
                                       P(v, "x^2*k_d - y^2*k_d + x*z*k_n + z^2*k_d"),
                                       P(v, "x^2*y*k_n + y^3*k_n - y*z^2*k_n"),
                                       P(v, "2*y^3*k_d - x*y*z*k_n - 2*y*z^2*k_d"),
                                   }));
    // dehomogenizing recovers the source basis
    for (std::size_t i = 0; i < sys.polys.size(); ++i)
        CHECK(dehomogenize(sys.polys[i], "z") == sys.source_basis.elements[i]);
}

TEST_CASE("closure of (s+1)/s^2 matches the paper") {
    const HomogeneousSystem sys = closure_of("(s+1)/s^2");
    const VariableSet& v = projective_vars();
    CHECK(same_poly_set(sys.polys, {
                                       P(v, "2*x*y*k_d + y*z*k_n"),
                                       P(v, "x^2*k_d - y^2*k_d + x*z*k_n + z^2*k_n"),
                                       P(v, "x^2*y*k_n + y^3*k_n + 2*x*y*z*k_n"),
                                       P(v, "2*y^3*k_d - x*y*z*k_n - 2*y*z^2*k_n"),
                                   }));
}

TEST_CASE("closure of the all-pass plant keeps the xy pair") {
    const HomogeneousSystem sys = closure_of("(1-s^2)/(1+s^2)");
    const VariableSet& v = projective_vars();
    bool has_kn = false, has_kd = false;
    for (const auto& g : sys.polys) {
        if (scalar_multiple(g, P(v, "x*y*k_n"))) has_kn = true;
        if (scalar_multiple(g, P(v, "x*y*k_d"))) has_kd = true;
    }
    CHECK(has_kn);
    CHECK(has_kd);
}

TEST_CASE("endpoint slices match the paper for all four plants") {
    const ParameterValue zero = ParameterValue::finite(Rational(0));
    const ParameterValue inf = ParameterValue::infinity();

    SUBCASE("s/(s^2+1)") {
        const HomogeneousSystem sys = closure_of("s/(s^2+1)");
        const LocusSlice w0 = endpoint(sys, zero);
        CHECK(same_point_set(w0.finite_points, {pt(0, 1, 1), pt(0, -1, 1)}));
        CHECK(w0.infinite_points.empty());
        const LocusSlice winf = endpoint(sys, inf);
        CHECK(same_point_set(winf.finite_points, {pt(0, 0, 1)}));
        CHECK(same_point_set(winf.infinite_points, {pt(1, 0, 0)}));
    }
    SUBCASE("(s+1)/s^2") {
        const HomogeneousSystem sys = closure_of("(s+1)/s^2");
        const LocusSlice w0 = endpoint(sys, zero);
        CHECK(same_point_set(w0.finite_points, {pt(0, 0, 1)}));
        CHECK(w0.infinite_points.empty());
        const LocusSlice winf = endpoint(sys, inf);
        CHECK(same_point_set(winf.finite_points, {pt(-1, 0, 1)}));
        CHECK(same_point_set(winf.infinite_points, {pt(1, 0, 0)}));
    }
    SUBCASE("1/(s*((s+4)^2+4^2))") {
        const HomogeneousSystem sys = closure_of("1/(s*((s+4)^2+4^2))");
        const LocusSlice w0 = endpoint(sys, zero);
        CHECK(same_point_set(w0.finite_points, {pt(0, 0, 1), pt(-4, 4, 1), pt(-4, -4, 1)}));
        const LocusSlice winf = endpoint(sys, inf);
        CHECK(winf.finite_points.empty());
        REQUIRE(winf.infinite_points.size() == 3);
        const AlgebraicValue msqrt3 = scale_value(kSqrt3, Rational(-1));
        const ProjectivePoint up(AlgebraicValue(Rational(1)), kSqrt3, AlgebraicValue(Rational(0)));
        const ProjectivePoint down(AlgebraicValue(Rational(1)), msqrt3, AlgebraicValue(Rational(0)));
        CHECK(same_point_set(winf.infinite_points, {pt(1, 0, 0), up, down}));
        // the irrational coordinates carry the minimal polynomial y^2 - 3
        int certified = 0;
        for (const auto& p : winf.infinite_points) {
            if (p.y.is_exact()) continue;
            ++certified;
            CHECK(p.y.defining().primitive() == UniPoly({Rational(-3), Rational(0), Rational(1)}));
            CHECK(p.y.width() < Rational(1, 1000000000));
        }
        CHECK(certified == 2);
    }
    SUBCASE("(1-s^2)/(1+s^2)") {
        const HomogeneousSystem sys = closure_of("(1-s^2)/(1+s^2)");
        const LocusSlice w0 = endpoint(sys, zero);
        CHECK(same_point_set(w0.finite_points, {pt(0, 1, 1), pt(0, -1, 1)}));
        const LocusSlice winf = endpoint(sys, inf);
        CHECK(same_point_set(winf.finite_points, {pt(1, 0, 1), pt(-1, 0, 1)}));
        CHECK(winf.infinite_points.empty());
    }
}

TEST_CASE("naive homogenization admits the spurious point the closure rejects") {
    const PencilPair pair = build_pencil(parse_transfer_function("s/(s^2+1)"));
    const std::vector<MultiPoly> naive = naive_homogenization(pair);
    const std::array<Rational, 5> spurious{Rational(1), Rational(1), Rational(0), Rational(0), Rational(1)};
    for (const auto& g : naive) CHECK(g.eval(spurious) == 0);

    const HomogeneousSystem sys = projective_closure(pair);
    bool all_vanish = true;
    for (const auto& g : sys.polys)
        if (g.eval(spurious) != 0) all_vanish = false;
    CHECK(!all_vanish);
    const LocusSlice winf = endpoint(sys, ParameterValue::infinity());
    for (const auto& p : winf.infinite_points) CHECK(!p.same_point(pt(1, 1, 0)));
}

TEST_CASE("specialization at k=infinity reproduces the paper's recomputed bases") {
    const auto at_inf = [](std::string_view plant) {
        return specialize(closure_of(plant), ParameterValue::infinity(), true);
    };
    const VariableSet& v = slice_vars();
    CHECK(same_poly_set(at_inf("s/(s^2+1)"), {P(v, "y*z"), P(v, "x*z"), P(v, "x^2*y + y^3")}));
    CHECK(same_poly_set(at_inf("(s+1)/s^2"), {P(v, "y*z"), P(v, "x*z + z^2"), P(v, "x^2*y + y^3")}));
}

TEST_CASE("specialization without recomputation is the plain substitution") {
    const HomogeneousSystem sys = closure_of("s/(s^2+1)");
    const auto polys = specialize(sys, ParameterValue::finite(Rational(0)), false);
    const VariableSet& v = slice_vars();
    CHECK(same_poly_set(polys, {P(v, "x*y"), P(v, "x^2 - y^2 + z^2"), P(v, "y^3 - y*z^2")}));
}

TEST_CASE("symbolic intermediary systems match the paper") {
    const VariableSet& v = symbolic_vars();
    CHECK(same_poly_set(specialize_symbolic(closure_of("s/(s^2+1)")),
                        {P(v, "y*(2*x + z*lambda)"), P(v, "x^2 - y^2 + z^2 + x*z*lambda"),
                         P(v, "y*(x^2 + y^2 - z^2)")}));
    CHECK(same_poly_set(specialize_symbolic(closure_of("(s+1)/s^2")),
                        {P(v, "2*x*y + y*z*lambda"), P(v, "x^2 - y^2 + x*z*lambda + z^2*lambda"),
                         P(v, "x^2*y + y^3 + 2*x*y*z")}));
}

TEST_CASE("affine views reproduce the paper's curves") {
    SUBCASE("hyperbola of s/(s^2+1) in the ZY chart") {
        const AffineView view = affine_view_symbolic(closure_of("s/(s^2+1)"), Patch::zy);
        const VariableSet v({"y", "z", "lambda"});
        CHECK(contains_scalar_multiple(view.polys, P(v, "z^2 - y^2 - 1")));
    }
    SUBCASE("parabola of (s+1)/s^2 in the ZY chart") {
        const AffineView view = affine_view_symbolic(closure_of("(s+1)/s^2"), Patch::zy);
        const VariableSet v({"y", "z", "lambda"});
        CHECK(contains_scalar_multiple(view.polys, P(v, "y^2 + 2*z + 1")));
    }
    SUBCASE("conventional chart of (s+1)/s^2") {
        const AffineView view = affine_view_symbolic(closure_of("(s+1)/s^2"), Patch::xy);
        const VariableSet v({"x", "y", "lambda"});
        CHECK(same_poly_set(view.polys, {P(v, "y*(2*x + lambda)"), P(v, "x^2 - y^2 + lambda*(x + 1)"),
                                         P(v, "y*(x^2 + y^2 + 2*x)")}));
    }
}

TEST_CASE("elimination in the ZY chart yields l1 and l2") {
    const AffineView view = affine_view_symbolic(closure_of("1/(s*((s+4)^2+4^2))"), Patch::zy);
    std::vector<MultiPoly> stripped;
    for (const auto& g : view.polys) stripped.push_back(strip_y(g));
    const GrobnerBasis gb = buchberger(stripped, grevlex(view.polys[0].vars()));
    const VariableSet v({"y", "z", "lambda"});
    CHECK(same_poly_set(gb.elements, {P(v, "y^2 - 32*z^2 - 16*z - 3"),
                                      P(v, "(lambda - 256)*z^3 - 192*z^2 - 64*z - 8")}));
}

TEST_CASE("the blow-up gain of the third plant is 256") {
    // l2 at lambda = 256 +- 1e-3 has a real root beyond |z| = 1e3
    const VariableSet v({"y", "z", "lambda"});
    const MultiPoly l2 = P(v, "(lambda - 256)*z^3 - 192*z^2 - 64*z - 8");
    for (const Rational eps : {Rational(1, 1000), Rational(-1, 1000)}) {
        const MultiPoly at = l2.substitute(2, Rational(256) + eps).restrict_to(VariableSet({"z"}));
        const UniPoly u = UniPoly::from_multipoly(at, 0);
        bool far = false;
        for (const auto& root : real_roots(u)) {
            if (root.value.to_double() > 1000 || root.value.to_double() < -1000) far = true;
        }
        CHECK(far);
    }
}

TEST_CASE("intermediary geometry of the all-pass plant") {
    const HomogeneousSystem sys = closure_of("(1-s^2)/(1+s^2)");
    SUBCASE("lambda = 1/2 lifts to (0, +-sqrt(3)/2, 1/2)") {
        const ParameterValue k = ParameterValue::finite(Rational(1, 2));
        const LocusSlice slice = solve_slice(specialize(sys, k), k);
        REQUIRE(slice.finite_points.size() == 2);
        for (const auto& p : slice.finite_points) {
            const SpherePoint sp = gnomonic_lift(p);
            CHECK(std::abs(sp.X) < 1e-9);
            CHECK(std::abs(std::abs(sp.Y) - std::sqrt(3.0) / 2) < 1e-9);
            CHECK(std::abs(sp.Z - 0.5) < 1e-9);
        }
    }
    SUBCASE("lambda = 2 lifts to (+-sqrt(3)/2, 0, 1/2)") {
        const ParameterValue k = ParameterValue::finite(Rational(2));
        const LocusSlice slice = solve_slice(specialize(sys, k), k);
        REQUIRE(slice.finite_points.size() == 2);
        for (const auto& p : slice.finite_points) {
            const SpherePoint sp = gnomonic_lift(p);
            CHECK(std::abs(std::abs(sp.X) - std::sqrt(3.0) / 2) < 1e-9);
            CHECK(std::abs(sp.Y) < 1e-9);
            CHECK(std::abs(sp.Z - 0.5) < 1e-9);
        }
    }
    SUBCASE("degree drops exactly at lambda = 1") {
        const RationalFunction G = parse_transfer_function("(1-s^2)/(1+s^2)");
        const auto sweep = sweep_conventional(G, {Rational(999, 1000), Rational(1), Rational(1001, 1000)});
        CHECK(!sweep[0].degree_drop);
        CHECK(sweep[1].degree_drop);
        CHECK(!sweep[2].degree_drop);
    }
}

TEST_CASE("chart swaps") {
    CHECK(swap_patch_coords(pt(0, 0, 1), Patch::zy).same_point(pt(1, 0, 0)));
    CHECK(swap_patch_coords(pt(-4, 4, 1), Patch::zy).same_point(pt(-1, -4, 4).normalized()));
    CHECK(swap_patch_coords(pt(-4, 4, 1), Patch::zy).same_point(ProjectivePoint(Rational(-1, 4), Rational(-1), Rational(1))));
    CHECK(swap_patch_coords(pt(1, 1, 1), Patch::zy).same_point(pt(1, 1, 1)));
    CHECK(swap_patch_coords(pt(1, 2, 3), Patch::xz).same_point(pt(1, 3, 2)));
}

TEST_CASE("asymptote directions") {
    const HomogeneousSystem ex3 = closure_of("1/(s*((s+4)^2+4^2))");
    const LocusSlice winf = endpoint(ex3, ParameterValue::infinity());
    const auto dirs = asymptote_directions(winf, Patch::xy);
    REQUIRE(dirs.size() == 3);
    std::vector<double> slopes;
    for (const auto& d : dirs) {
        CHECK(!d.vertical);
        slopes.push_back(d.slope.to_double());
    }
    std::sort(slopes.begin(), slopes.end());
    CHECK(slopes[0] == doctest::Approx(-std::sqrt(3.0)).epsilon(1e-9));
    CHECK(slopes[1] == doctest::Approx(0.0));
    CHECK(slopes[2] == doctest::Approx(std::sqrt(3.0)).epsilon(1e-9));

    // complementary chart: the initial points of s/(s^2+1) become slopes +-1
    const HomogeneousSystem ex1 = closure_of("s/(s^2+1)");
    const LocusSlice w0 = endpoint(ex1, ParameterValue::finite(Rational(0)));
    const auto comp = asymptote_directions(w0, Patch::zy);
    REQUIRE(comp.size() == 2);
    std::vector<Rational> rs{comp[0].slope.exact(), comp[1].slope.exact()};
    std::sort(rs.begin(), rs.end());
    CHECK(rs[0] == -1);
    CHECK(rs[1] == 1);

    // the vertical direction
    LocusSlice vert;
    vert.infinite_points.push_back(pt(0, 1, 0));
    const auto vdirs = asymptote_directions(vert, Patch::xy);
    REQUIRE(vdirs.size() == 1);
    CHECK(vdirs[0].vertical);
}

TEST_CASE("slice points satisfy every specialized polynomial") {
    for (const char* plantstr : {"s/(s^2+1)", "(s+1)/s^2", "1/(s*((s+4)^2+4^2))"}) {
        const HomogeneousSystem sys = closure_of(plantstr);
        for (const Rational k : {Rational(1, 4), Rational(1), Rational(4)}) {
            const ParameterValue pv = ParameterValue::finite(k);
            const auto polys = specialize(sys, pv);
            const LocusSlice slice = solve_slice(polys, pv);
            for (const auto& p : slice.finite_points) {
                const std::array<double, 3> c = p.to_doubles();
                const std::array<std::complex<double>, 3> at{c[0], c[1], c[2]};
                for (const auto& g : polys)
                    CHECK(std::abs(g.eval(std::span<const std::complex<double>>(at.data(), 3))) < 1e-8);
            }
        }
    }
}
