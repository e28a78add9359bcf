#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "pjrl/unipoly.hpp"

using namespace pjrl;
using pjrl::testing::random_rational;

namespace {

UniPoly U(std::vector<long long> coeffs) {
    std::vector<Rational> c;
    for (auto v : coeffs) c.emplace_back(v);
    return UniPoly(std::move(c));
}

UniPoly random_unipoly(std::mt19937& rng, int max_degree) {
    std::uniform_int_distribution<int> deg(1, max_degree);
    std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& v : c) v = random_rational(rng);
    if (c.back() == 0) c.back() = 1;
    return UniPoly(std::move(c));
}

// brute-force distinct-real-root count by fine-grid sign scanning
int grid_root_count(const UniPoly& p, const Rational& lo, const Rational& hi, int steps) {
    int count = 0;
    Rational prev_at = lo;
    int prev_sign = 0;
    for (int i = 0; i <= steps; ++i) {
        const Rational t = lo + (hi - lo) * Rational(i, steps);
        const Rational v = p.eval(t);
        const int s = v == 0 ? 0 : (v > 0 ? 1 : -1);
        if (s == 0) {
            if (t != lo) ++count;  // half-open (lo, hi]
            prev_sign = 0;         // the crossing is already accounted for
        } else {
            if (prev_sign != 0 && s != prev_sign) ++count;
            prev_sign = s;
        }
        prev_at = t;
    }
    return count;
}

}  // namespace

TEST_CASE("division and gcd") {
    const UniPoly a = U({-1, 0, 1});       // x^2 - 1
    const UniPoly b = U({1, -2, 1});       // (x-1)^2
    const auto [q, r] = a.divmod(b);
    CHECK(a == q * b + r);
    CHECK(r.degree() < b.degree());
    CHECK(UniPoly::gcd(a, b) == U({-1, 1}));  // x - 1, monic
    CHECK(UniPoly::gcd(U({2}), a).degree() == 0);
}

TEST_CASE("from_roots and evaluation") {
    const std::vector<Rational> roots{Rational(1), Rational(-2), Rational(1, 2)};
    const UniPoly p = UniPoly::from_roots(roots);
    CHECK(p.degree() == 3);
    CHECK(p.leading() == 1);
    for (const auto& r : roots) CHECK(p.eval(r) == 0);
    CHECK(p.eval(Rational(0)) == Rational(1));  // (-1)(2)(-1/2)
    const std::complex<double> at = p.eval(std::complex<double>(0.0, 1.0));
    CHECK(std::abs(at - (std::complex<double>(0, 1) - 1.0) * (std::complex<double>(0, 1) + 2.0) *
                            (std::complex<double>(0, 1) - 0.5)) < 1e-12);
}

TEST_CASE("squarefree decomposition") {
    const UniPoly p = U({-1, 1}) * U({-1, 1}) * U({2, 1});  // (x-1)^2 (x+2)
    const auto parts = p.squarefree_decomposition();
    REQUIRE(parts.size() == 2);
    bool saw_simple = false, saw_double = false;
    for (const auto& [f, mult] : parts) {
        if (mult == 1) {
            saw_simple = true;
            CHECK(f.monic() == U({2, 1}));
        }
        if (mult == 2) {
            saw_double = true;
            CHECK(f.monic() == U({-1, 1}));
        }
    }
    CHECK(saw_simple);
    CHECK(saw_double);
    CHECK(p.squarefree_part().monic() == (U({-1, 1}) * U({2, 1})).monic());
}

TEST_CASE("root bound really bounds") {
    std::mt19937 rng(23);
    for (int i = 0; i < 40; ++i) {
        const UniPoly p = random_unipoly(rng, 5);
        const Rational bound = p.root_bound();
        // no sign change outside [-bound, bound]: sample a few far points
        const Rational far = bound * 2;
        const int s1 = p.eval(far) > 0 ? 1 : -1;
        const int s2 = p.eval(far * 2) > 0 ? 1 : -1;
        CHECK(s1 == s2);
        CHECK(grid_root_count(p, bound, far, 200) == 0);
    }
}

TEST_CASE("sturm count matches grid scanning on random polynomials") {
    std::mt19937 rng(29);
    for (int i = 0; i < 60; ++i) {
        const UniPoly p = random_unipoly(rng, 4).squarefree_part();
        if (p.degree() < 1) continue;
        const Rational b = p.root_bound();
        CHECK(count_real_roots(p, -b, b) == grid_root_count(p, -b, b, 2000));
    }
}

TEST_CASE("example cubic has one real root at -4") {
    const UniPoly p = U({32, 24, 8, 1});
    CHECK(count_real_roots(p, Rational(-100), Rational(0)) == 1);
    CHECK(p.eval(Rational(-4)) == 0);
}

TEST_CASE("interval arithmetic is conservative") {
    std::mt19937 rng(31);
    for (int i = 0; i < 50; ++i) {
        const UniPoly p = random_unipoly(rng, 4);
        Rational lo = random_rational(rng), hi = lo + Rational(1, 3);
        const RatInterval box = eval_interval(p, {lo, hi});
        for (int j = 0; j <= 4; ++j) {
            const Rational t = lo + (hi - lo) * Rational(j, 4);
            const Rational v = p.eval(t);
            CHECK(box.lo <= v);
            CHECK(v <= box.hi);
        }
    }
    // division excludes zero
    CHECK_THROWS(RatInterval(Rational(1)) / RatInterval(Rational(-1), Rational(1)));
    const RatInterval d = RatInterval(Rational(1), Rational(2)) / RatInterval(Rational(-4), Rational(-2));
    CHECK(d.lo == Rational(-1));
    CHECK(d.hi == Rational(-1, 4));
}

TEST_CASE("algebraic values certify sqrt2") {
    AlgebraicValue r(U({-2, 0, 1}), Rational(1), Rational(2));
    CHECK(!r.is_exact());
    r.refine_below(Rational(1, 1000000000000LL));
    CHECK(r.width() < Rational(1, 1000000000000LL));
    CHECK(std::abs(r.to_double() - 1.4142135623730951) < 1e-12);
    CHECK(r.sign() == 1);

    AlgebraicValue again(U({-2, 0, 1}), Rational(0), Rational(3, 2) + Rational(1, 100));
    CHECK(r.same_value(again));
    const AlgebraicValue neg(U({-2, 0, 1}), Rational(-2), Rational(-1));
    CHECK(!r.same_value(neg));
    CHECK(neg.sign() == -1);

    CHECK(r.same_value(AlgebraicValue::box(Rational(14, 10), Rational(15, 10))));
    CHECK(!r.same_value(AlgebraicValue(Rational(3, 2))));
}

TEST_CASE("rational endpoint roots collapse to exact values") {
    const AlgebraicValue two(U({-4, 0, 1}), Rational(2), Rational(3));
    CHECK(two.is_exact());
    CHECK(two.exact() == 2);
    const AlgebraicValue also_two(U({-4, 0, 1}), Rational(0), Rational(2));
    CHECK(also_two.is_exact());
    CHECK(also_two.exact() == 2);
}
