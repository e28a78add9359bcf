#include "pjrl/transfer.hpp"

namespace pjrl {

RationalFunction parse_transfer_function(std::string_view text) {
    RatExpr expr = parse_rational_expr(text, s_var());
    if (expr.den.is_zero()) throw ParseError(text.size(), "zero denominator");
    if (expr.num.is_zero()) throw ParseError(text.size(), "zero plant");

    if (!coprimality_check(expr.num, expr.den)) {
        throw NonCoprimeError(univariate_gcd(expr.num, expr.den).str());
    }
    const UniPoly den = UniPoly::from_multipoly(expr.den, 0);
    const Rational lead = den.leading();
    return {expr.num / lead, expr.den / lead};
}

}  // namespace pjrl
