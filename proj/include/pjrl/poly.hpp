#pragma once

#include "pjrl/rational.hpp"

#include <compare>
#include <complex>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pjrl {

/// Ordered list of variable names; index 0 has the highest precedence.
class VariableSet {
public:
    VariableSet() = default;
    explicit VariableSet(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<std::size_t> index(std::string_view name) const;
    std::size_t index_of(std::string_view name) const;  // throws if absent
    bool contains(std::string_view name) const { return index(name).has_value(); }
    /// True when every name of this set appears in `other`.
    bool embeds_into(const VariableSet& other) const;

    /// New set with `name` inserted at position `pos`.
    VariableSet with_inserted(std::size_t pos, std::string name) const;
    /// New set with the variable at `pos` removed.
    VariableSet with_removed(std::size_t pos) const;

    bool operator==(const VariableSet&) const = default;

private:
    std::vector<std::string> names_;
};

/// Exponent vector aligned with a VariableSet.
struct Monomial {
    std::vector<int> exps;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps(nvars, 0) {}
    explicit Monomial(std::vector<int> e) : exps(std::move(e)) {}

    int degree() const;
    int degree_in(std::span<const std::size_t> block) const;
    bool divides(const Monomial& other) const;
    Monomial operator*(const Monomial& other) const;
    /// Requires other.divides(*this).
    Monomial operator/(const Monomial& other) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);
    static bool coprime(const Monomial& a, const Monomial& b);

    auto operator<=>(const Monomial&) const = default;
};

enum class OrderKind { grevlex, grlex, lex };

class MonomialOrder {
public:
    MonomialOrder() : kind_(OrderKind::grevlex) {}
    MonomialOrder(OrderKind kind, VariableSet vars) : kind_(kind), vars_(std::move(vars)) {}

    OrderKind kind() const { return kind_; }
    const VariableSet& vars() const { return vars_; }

    std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

private:
    OrderKind kind_;
    VariableSet vars_;
};

MonomialOrder grevlex(const VariableSet& vars);
MonomialOrder grlex(const VariableSet& vars);
MonomialOrder lex(const VariableSet& vars);

/// Exact multivariate polynomial over Q in canonical form: a term map with no
/// zero coefficients. Immutable in spirit; all operations return new values.
class MultiPoly {
public:
    MultiPoly() = default;
    explicit MultiPoly(VariableSet vars) : vars_(std::move(vars)) {}

    static MultiPoly constant(VariableSet vars, Rational c);
    static MultiPoly variable(const VariableSet& vars, std::string_view name, int power = 1);

    const VariableSet& vars() const { return vars_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const;  // requires is_constant()
    std::size_t term_count() const { return terms_.size(); }

    int total_degree() const;  // -1 for the zero polynomial
    int degree_in(std::size_t var) const;
    int block_degree(std::span<const std::size_t> block) const;

    void add_term(const Monomial& m, const Rational& c);

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Rational& c) const;
    MultiPoly operator/(const Rational& c) const;
    MultiPoly pow(unsigned e) const;

    bool operator==(const MultiPoly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }

    std::pair<Monomial, Rational> leading_term(const MonomialOrder& order) const;  // requires nonzero
    Monomial leading_monomial(const MonomialOrder& order) const;
    MultiPoly monic(const MonomialOrder& order) const;

    /// Substitutes var := value; the variable stays in the VariableSet.
    MultiPoly substitute(std::size_t var, const Rational& value) const;
    /// Substitutes var := replacement (same VariableSet).
    MultiPoly substitute(std::size_t var, const MultiPoly& replacement) const;

    /// Re-expresses over a superset of variables (matched by name).
    MultiPoly lift(const VariableSet& target) const;
    /// Re-expresses over a subset; every dropped variable must be absent.
    MultiPoly restrict_to(const VariableSet& target) const;

    Rational eval(std::span<const Rational> point) const;
    std::complex<double> eval(std::span<const std::complex<double>> point) const;

    /// Deterministic rendering, terms in descending grevlex order.
    std::string str() const;

private:
    static void align(const MultiPoly& a, const MultiPoly& b, MultiPoly& la, MultiPoly& lb);

    VariableSet vars_;
    std::map<Monomial, Rational> terms_;
};

inline MultiPoly operator*(const Rational& c, const MultiPoly& p) { return p * c; }

/// Homogenizes over the given variable block with a fresh variable inserted
/// right after the block. Degree-0 input (a constant) is returned unchanged
/// apart from the extended variable set.
MultiPoly homogenize(const MultiPoly& p, const std::vector<std::string>& block, const std::string& new_var);

/// Sets `var` to 1 and removes it from the variable set.
MultiPoly dehomogenize(const MultiPoly& p, const std::string& var);

}  // namespace pjrl
