#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace pjrl {

using Integer = boost::multiprecision::cpp_int;
// Always kept in lowest terms with positive denominator by the backend.
using Rational = boost::multiprecision::cpp_rational;

inline Integer numer(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denom(const Rational& r) { return boost::multiprecision::denominator(r); }

/// Canonical "p" or "p/q" form.
std::string rational_str(const Rational& r);

/// Parses "p", "-p/q" or a decimal literal like "0.25" (exact, never a binary float).
std::optional<Rational> parse_rational(std::string_view text);

double to_double(const Rational& r);

Integer abs_int(const Integer& v);

}  // namespace pjrl
