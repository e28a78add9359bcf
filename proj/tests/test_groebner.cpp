#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "pjrl/groebner.hpp"

using namespace pjrl;
using pjrl::testing::P;
using pjrl::testing::random_poly;

namespace {

const VariableSet pencil({"x", "y", "k_d", "k_n"});

bool mutually_reduce(const std::vector<MultiPoly>& ours, const std::vector<MultiPoly>& reference,
                     const MonomialOrder& order) {
    for (const auto& g : reference)
        if (!reduce(g, ours, order).is_zero()) return false;
    for (const auto& g : ours)
        if (!reduce(g, reference, order).is_zero()) return false;
    return true;
}

}  // namespace

TEST_CASE("reduction gives a normal form") {
    const VariableSet xy({"x", "y"});
    const MonomialOrder order = grevlex(xy);
    const std::vector<MultiPoly> basis{P(xy, "y"), P(xy, "x+1")};
    CHECK(reduce(P(xy, "x^2*y + 3*x - y + 2"), basis, order) == P(xy, "-1"));
    CHECK(reduce(P(xy, "y^5"), basis, order).is_zero());
}

TEST_CASE("s-polynomial cancels leading terms") {
    const VariableSet xy({"x", "y"});
    const MonomialOrder order = grevlex(xy);
    const MultiPoly f = P(xy, "x^2 + y");
    const MultiPoly g = P(xy, "x*y - 1");
    CHECK(s_polynomial(f, g, order) == P(xy, "y^2 + x"));
}

TEST_CASE("pencil basis matches the paper for s/(s^2+1)") {
    const MultiPoly q = P(pencil, "k_d*(x^2 - y^2 + 1) + k_n*x");
    const MultiPoly r = P(pencil, "2*k_d*x*y + k_n*y");
    const GrobnerBasis gb = buchberger(std::vector<MultiPoly>{q, r}, grevlex(pencil));
    REQUIRE(gb.elements.size() == 4);
    CHECK(gb.reduced);
    const std::vector<MultiPoly> paper{
        P(pencil, "2*x*y*k_d + y*k_n"),
        P(pencil, "x^2*k_d - y^2*k_d + x*k_n + k_d"),
        P(pencil, "x^2*y*k_n + y^3*k_n - y*k_n"),
        P(pencil, "2*y^3*k_d - x*y*k_n - 2*y*k_d"),
    };
    CHECK(mutually_reduce(gb.elements, paper, gb.order));
}

TEST_CASE("pencil basis matches the paper for (s+1)/s^2") {
    const MultiPoly q = P(pencil, "k_d*(x^2 - y^2) + k_n*(x + 1)");
    const MultiPoly r = P(pencil, "2*k_d*x*y + k_n*y");
    const GrobnerBasis gb = buchberger(std::vector<MultiPoly>{q, r}, grevlex(pencil));
    REQUIRE(gb.elements.size() == 4);
    const std::vector<MultiPoly> paper{
        P(pencil, "2*x*y*k_d + y*k_n"),
        P(pencil, "x^2*k_d - y^2*k_d + x*k_n + k_n"),
        P(pencil, "x^2*y*k_n + y^3*k_n + 2*x*y*k_n"),
        P(pencil, "2*y^3*k_d - x*y*k_n - 2*y*k_n"),
    };
    CHECK(mutually_reduce(gb.elements, paper, gb.order));
}

TEST_CASE("buchberger closes all s-pairs on random ideals") {
    std::mt19937 rng(43);
    const VariableSet xyz({"x", "y", "z"});
    std::uniform_int_distribution<int> ngens(1, 3);
    int done = 0;
    while (done < 50) {
        std::vector<MultiPoly> gens;
        for (int g = ngens(rng); g-- > 0;) {
            const MultiPoly p = random_poly(rng, xyz, 3, 3);
            if (!p.is_zero()) gens.push_back(p);
        }
        if (gens.empty()) continue;
        ++done;
        const GrobnerBasis gb = buchberger(gens, grevlex(xyz));
        for (const auto& g : gens) CHECK(reduce(g, gb).is_zero());
        for (std::size_t i = 0; i < gb.elements.size(); ++i)
            for (std::size_t j = i + 1; j < gb.elements.size(); ++j)
                CHECK(reduce(s_polynomial(gb.elements[i], gb.elements[j], gb.order), gb).is_zero());
        // reduced: monic, ascending leading terms, no element reducible by the rest
        for (std::size_t i = 0; i < gb.elements.size(); ++i) {
            CHECK(gb.elements[i].leading_term(gb.order).second == 1);
            if (i + 1 < gb.elements.size())
                CHECK(gb.order.less(gb.elements[i].leading_monomial(gb.order),
                                    gb.elements[i + 1].leading_monomial(gb.order)));
        }
    }
}

TEST_CASE("ideal membership") {
    const VariableSet xy({"x", "y"});
    const GrobnerBasis gb = buchberger(std::vector<MultiPoly>{P(xy, "x^2 + y"), P(xy, "x*y - 1")}, grevlex(xy));
    CHECK(ideal_membership(P(xy, "(x^2+y)*(x-3) + (x*y-1)*y^2"), gb));
    CHECK(!ideal_membership(P(xy, "x"), gb));
}

TEST_CASE("an inconsistent system reduces to one") {
    const VariableSet xy({"x", "y"});
    const GrobnerBasis gb = buchberger(std::vector<MultiPoly>{P(xy, "x"), P(xy, "x - 1")}, grevlex(xy));
    REQUIRE(gb.elements.size() == 1);
    CHECK(gb.elements[0] == P(xy, "1"));
}
