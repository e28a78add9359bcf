#pragma once

#include "pjrl/poly.hpp"

#include <vector>

namespace pjrl {

/// Dense univariate polynomial over Q, coefficients in ascending degree,
/// trailing zeros trimmed (zero polynomial has empty coefficient list).
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);
    static UniPoly constant(Rational c);
    static UniPoly from_roots(std::span<const Rational> roots);  // monic

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& coeff(std::size_t i) const { return c_[i]; }
    Rational leading() const { return c_.back(); }

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(const Rational& s) const;
    UniPoly operator-() const;
    bool operator==(const UniPoly&) const = default;

    UniPoly derivative() const;
    Rational eval(const Rational& t) const;
    double eval(double t) const;
    std::complex<double> eval(std::complex<double> t) const;

    /// Quotient and remainder over Q.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;
    UniPoly monic() const;
    /// Scales to integer coefficients with content 1 and positive leading coefficient.
    UniPoly primitive() const;

    /// All real roots lie strictly inside (-bound, bound).
    Rational root_bound() const;

    std::string str(const std::string& var = "t") const;

    static UniPoly gcd(UniPoly a, UniPoly b);  // monic gcd

    /// Yun squarefree decomposition: returns (factor, multiplicity) pairs with
    /// pairwise-coprime squarefree factors whose weighted product rebuilds the input.
    std::vector<std::pair<UniPoly, int>> squarefree_decomposition() const;
    UniPoly squarefree_part() const;

    MultiPoly to_multipoly(const VariableSet& vars, std::string_view var) const;
    /// The polynomial must involve at most the single variable `var`.
    static UniPoly from_multipoly(const MultiPoly& p, std::size_t var);

private:
    void trim();
    std::vector<Rational> c_;
};

/// Closed rational interval used for certified evaluation.
struct RatInterval {
    Rational lo, hi;

    RatInterval() = default;
    RatInterval(Rational point) : lo(point), hi(point) {}
    RatInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {}

    bool is_point() const { return lo == hi; }
    bool contains_zero() const { return lo <= 0 && hi >= 0; }
    bool is_zero() const { return lo == 0 && hi == 0; }
    Rational width() const { return hi - lo; }
    Rational mid() const { return (lo + hi) / 2; }
    /// Certified sign: -1, 0 (only for exact zero) or +1; nullopt when the
    /// interval straddles zero without being it.
    std::optional<int> sign() const;

    RatInterval operator+(const RatInterval& o) const;
    RatInterval operator-(const RatInterval& o) const;
    RatInterval operator*(const RatInterval& o) const;
    RatInterval operator-() const;
    /// Requires the divisor to exclude zero.
    RatInterval operator/(const RatInterval& o) const;
};

/// A real number that is either an exact rational or an irrational root of a
/// squarefree rational polynomial, isolated by a shrinking rational interval.
class AlgebraicValue {
public:
    AlgebraicValue() : lo_(0), hi_(0) {}
    AlgebraicValue(Rational exact) : lo_(exact), hi_(std::move(exact)) {}
    /// `defining` must be squarefree with a sign change across (lo, hi) and no
    /// rational root inside the interval.
    AlgebraicValue(UniPoly defining, Rational lo, Rational hi);
    /// A bare enclosing interval with no defining polynomial (not refinable).
    /// Used for values derived arithmetically from already-tight intervals.
    static AlgebraicValue box(Rational lo, Rational hi);
    static AlgebraicValue box(const RatInterval& iv) { return box(iv.lo, iv.hi); }

    bool is_boxed() const { return boxed_; }
    bool is_exact() const { return !boxed_ && defining_.is_zero(); }
    const Rational& exact() const;
    const UniPoly& defining() const { return defining_; }
    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    RatInterval interval() const { return {lo_, hi_}; }
    Rational width() const { return hi_ - lo_; }

    void refine();  // one bisection step (no-op when exact)
    void refine_below(const Rational& width);
    double to_double() const;
    int sign() const;  // certified (irrational values are never zero)

    /// True when both represent provably the same real number.
    bool same_value(const AlgebraicValue& other) const;

private:
    UniPoly defining_;  // empty means exact (or a bare box)
    Rational lo_, hi_;
    bool boxed_ = false;
};

RatInterval eval_interval(const UniPoly& p, const RatInterval& x);
RatInterval pow_interval(const RatInterval& x, int e);

/// Canonical Sturm chain of p (p need not be squarefree; the chain ends at the gcd).
std::vector<UniPoly> sturm_sequence(const UniPoly& p);
int sign_variations(const std::vector<UniPoly>& seq, const Rational& at);
/// Number of distinct real roots of the squarefree `p` in the half-open (lo, hi].
int count_real_roots(const UniPoly& p, const Rational& lo, const Rational& hi);

}  // namespace pjrl
