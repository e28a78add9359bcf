#include "pjrl/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace pjrl {

std::string rational_str(const Rational& r) {
    std::string s = numer(r).str();
    if (denom(r) != 1) {
        s += "/";
        s += denom(r).str();
    }
    return s;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

Integer abs_int(const Integer& v) { return v < 0 ? Integer(-v) : v; }

std::optional<Rational> parse_rational(std::string_view text) {
    if (text.empty()) return std::nullopt;
    std::size_t pos = 0;
    bool neg = false;
    if (text[pos] == '+' || text[pos] == '-') {
        neg = text[pos] == '-';
        ++pos;
    }
    auto digits = [&](std::string& out) {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) out += text[pos++];
        return pos > start;
    };
    std::string ipart;
    if (!digits(ipart)) return std::nullopt;
    Rational value;
    if (pos < text.size() && text[pos] == '.') {
        ++pos;
        std::string fpart;
        if (!digits(fpart)) return std::nullopt;
        Integer scale = 1;
        for (std::size_t i = 0; i < fpart.size(); ++i) scale *= 10;
        value = Rational(Integer(ipart) * scale + Integer(fpart), scale);
    } else if (pos < text.size() && text[pos] == '/') {
        ++pos;
        std::string den;
        if (!digits(den)) return std::nullopt;
        Integer d(den);
        if (d == 0) return std::nullopt;
        value = Rational(Integer(ipart), d);
    } else {
        value = Rational(Integer(ipart));
    }
    if (pos != text.size()) return std::nullopt;
    return neg ? Rational(-value) : value;
}

}  // namespace pjrl
