#include "pjrl/pencil.hpp"

namespace pjrl {

const VariableSet& plane_vars() {
    static const VariableSet v({"x", "y"});
    return v;
}
const VariableSet& pencil_vars() {
    static const VariableSet v({"x", "y", "k_d", "k_n"});
    return v;
}
const VariableSet& projective_vars() {
    static const VariableSet v({"x", "y", "z", "k_d", "k_n"});
    return v;
}
const VariableSet& slice_vars() {
    static const VariableSet v({"x", "y", "z"});
    return v;
}
const VariableSet& symbolic_vars() {
    static const VariableSet v({"x", "y", "z", "lambda"});
    return v;
}
const VariableSet& s_var() {
    static const VariableSet v({"s"});
    return v;
}

UniPoly RationalFunction::num_uni() const { return UniPoly::from_multipoly(num, num.vars().index_of("s")); }
UniPoly RationalFunction::den_uni() const { return UniPoly::from_multipoly(den, den.vars().index_of("s")); }

MultiPoly univariate_gcd(const MultiPoly& a, const MultiPoly& b) {
    const std::size_t si = a.vars().index_of("s");
    UniPoly g = UniPoly::gcd(UniPoly::from_multipoly(a, si), UniPoly::from_multipoly(b, si));
    return g.to_multipoly(a.vars(), "s");
}

bool coprimality_check(const MultiPoly& n, const MultiPoly& d) {
    if (d.is_zero()) throw std::invalid_argument("zero denominator");
    if (n.is_zero()) return d.total_degree() == 0;
    return univariate_gcd(n, d).total_degree() == 0;
}

std::pair<MultiPoly, MultiPoly> complex_split(const MultiPoly& p) {
    const UniPoly u = UniPoly::from_multipoly(p, p.vars().index_of("s"));
    const VariableSet& xy = plane_vars();
    const MultiPoly x = MultiPoly::variable(xy, "x");
    const MultiPoly y = MultiPoly::variable(xy, "y");
    // Horner on s = x + iy with exact real/imaginary bookkeeping.
    MultiPoly re(xy), im(xy);
    const auto& c = u.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
        // (re + i*im) * (x + i*y) + c_i
        MultiPoly nre = re * x - im * y + MultiPoly::constant(xy, c[i]);
        MultiPoly nim = re * y + im * x;
        re = std::move(nre);
        im = std::move(nim);
    }
    return {re, im};
}

PencilPair build_pencil(const RationalFunction& G) {
    if (!coprimality_check(G.num, G.den)) {
        throw NonCoprimeError(univariate_gcd(G.num, G.den).str());
    }
    MultiPoly d = G.den, n = G.num;
    bool swapped = false;
    if (n.total_degree() > d.total_degree()) {
        std::swap(d, n);
        swapped = true;
    }
    auto [q_d, r_d] = complex_split(d);
    auto [q_n, r_n] = complex_split(n);

    const VariableSet& pv = pencil_vars();
    const MultiPoly kd = MultiPoly::variable(pv, "k_d");
    const MultiPoly kn = MultiPoly::variable(pv, "k_n");
    PencilPair pair;
    pair.q_d = q_d;
    pair.r_d = r_d;
    pair.q_n = q_n;
    pair.r_n = r_n;
    pair.q = kd * q_d.lift(pv) + kn * q_n.lift(pv);
    pair.r = kd * r_d.lift(pv) + kn * r_n.lift(pv);
    pair.swapped = swapped;
    return pair;
}

}  // namespace pjrl
