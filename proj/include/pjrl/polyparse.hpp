#pragma once

#include "pjrl/poly.hpp"

#include <stdexcept>

namespace pjrl {

struct ParseError : std::runtime_error {
    ParseError(std::size_t position, const std::string& msg)
        : std::runtime_error(msg + " at position " + std::to_string(position)), pos(position) {}
    std::size_t pos;
};

/// A quotient of polynomials as produced by the expression grammar.
/// Not reduced; the caller decides what coprimality means for it.
struct RatExpr {
    MultiPoly num;
    MultiPoly den;
};

/// Parses `+ - * / ^ ( )` expressions over the given variables with integer,
/// decimal (exact) and rational literals. Division is tracked symbolically.
RatExpr parse_rational_expr(std::string_view text, const VariableSet& vars);

/// Same grammar, but the accumulated denominator must be a nonzero constant.
MultiPoly parse_poly(std::string_view text, const VariableSet& vars);

}  // namespace pjrl
