#include "pjrl/polyparse.hpp"

#include <cctype>

namespace pjrl {
namespace {

class Parser {
public:
    Parser(std::string_view text, const VariableSet& vars) : text_(text), vars_(vars) {}

    RatExpr parse() {
        RatExpr e = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return e;
    }

private:
    RatExpr expr() {
        skip_ws();
        bool neg = false;
        while (peek() == '+' || peek() == '-') {
            if (get() == '-') neg = !neg;
            skip_ws();
        }
        RatExpr acc = term();
        if (neg) acc.num = -acc.num;
        for (;;) {
            skip_ws();
            const char c = peek();
            if (c != '+' && c != '-') break;
            get();
            RatExpr rhs = term();
            // a/b +- c/d = (ad +- cb) / bd
            MultiPoly num = acc.num * rhs.den;
            MultiPoly other = rhs.num * acc.den;
            acc.num = (c == '+') ? num + other : num - other;
            acc.den = acc.den * rhs.den;
        }
        return acc;
    }

    RatExpr term() {
        RatExpr acc = factor();
        for (;;) {
            skip_ws();
            const char c = peek();
            if (c != '*' && c != '/') break;
            const std::size_t at = pos_;
            get();
            RatExpr rhs = factor();
            if (c == '*') {
                acc.num = acc.num * rhs.num;
                acc.den = acc.den * rhs.den;
            } else {
                if (rhs.num.is_zero()) fail_at(at, "division by zero");
                acc.num = acc.num * rhs.den;
                acc.den = acc.den * rhs.num;
            }
        }
        return acc;
    }

    RatExpr factor() {
        RatExpr base = atom();
        skip_ws();
        if (peek() == '^') {
            get();
            skip_ws();
            const std::size_t at = pos_;
            if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
            unsigned e = 0;
            while (std::isdigit(static_cast<unsigned char>(peek()))) {
                e = e * 10 + static_cast<unsigned>(get() - '0');
                if (e > 64) fail_at(at, "exponent too large");
            }
            base.num = base.num.pow(e);
            base.den = base.den.pow(e);
        }
        return base;
    }

    RatExpr atom() {
        skip_ws();
        const std::size_t at = pos_;
        const char c = peek();
        if (c == '(') {
            get();
            RatExpr e = expr();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            get();
            return e;
        }
        if (c == '-' || c == '+') {
            get();
            RatExpr e = factor();
            if (c == '-') e.num = -e.num;
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string lit;
            while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.') lit += get();
            auto v = parse_rational(lit);
            if (!v) fail_at(at, "bad numeric literal '" + lit + "'");
            return {MultiPoly::constant(vars_, *v), one()};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') name += get();
            if (!vars_.contains(name)) fail_at(at, "unknown variable '" + name + "'");
            return {MultiPoly::variable(vars_, name), one()};
        }
        if (c == '\0') fail("unexpected end of input");
        fail(std::string("unexpected character '") + c + "'");
        return {};  // unreachable
    }

    MultiPoly one() const { return MultiPoly::constant(vars_, Rational(1)); }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char get() { return text_[pos_++]; }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }
    [[noreturn]] void fail_at(std::size_t at, const std::string& msg) const { throw ParseError(at, msg); }

    std::string_view text_;
    const VariableSet& vars_;
    std::size_t pos_ = 0;
};

}  // namespace

RatExpr parse_rational_expr(std::string_view text, const VariableSet& vars) {
    return Parser(text, vars).parse();
}

MultiPoly parse_poly(std::string_view text, const VariableSet& vars) {
    RatExpr e = parse_rational_expr(text, vars);
    if (!e.den.is_constant() || e.den.is_zero())
        throw ParseError(0, "expression is not polynomial (non-constant denominator)");
    return e.num / e.den.constant_value();
}

}  // namespace pjrl
