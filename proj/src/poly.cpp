#include "pjrl/poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace pjrl {

// ---------------------------------------------------------------- VariableSet

VariableSet::VariableSet(std::vector<std::string> names) : names_(std::move(names)) {
    std::set<std::string_view> seen;
    for (const auto& n : names_) {
        if (n.empty()) throw std::invalid_argument("empty variable name");
        if (!seen.insert(n).second) throw std::invalid_argument("duplicate variable name: " + n);
    }
}

std::optional<std::size_t> VariableSet::index(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

std::size_t VariableSet::index_of(std::string_view name) const {
    auto i = index(name);
    if (!i) throw std::invalid_argument("unknown variable: " + std::string(name));
    return *i;
}

bool VariableSet::embeds_into(const VariableSet& other) const {
    for (const auto& n : names_)
        if (!other.contains(n)) return false;
    return true;
}

VariableSet VariableSet::with_inserted(std::size_t pos, std::string name) const {
    auto names = names_;
    names.insert(names.begin() + static_cast<std::ptrdiff_t>(pos), std::move(name));
    return VariableSet(std::move(names));
}

VariableSet VariableSet::with_removed(std::size_t pos) const {
    auto names = names_;
    names.erase(names.begin() + static_cast<std::ptrdiff_t>(pos));
    return VariableSet(std::move(names));
}

// ------------------------------------------------------------------- Monomial

int Monomial::degree() const {
    int d = 0;
    for (int e : exps) d += e;
    return d;
}

int Monomial::degree_in(std::span<const std::size_t> block) const {
    int d = 0;
    for (std::size_t i : block) d += exps[i];
    return d;
}

bool Monomial::divides(const Monomial& other) const {
    for (std::size_t i = 0; i < exps.size(); ++i)
        if (exps[i] > other.exps[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] += other.exps[i];
    return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < exps.size(); ++i) {
        r.exps[i] -= other.exps[i];
        if (r.exps[i] < 0) throw std::invalid_argument("monomial division not exact");
    }
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (std::size_t i = 0; i < r.exps.size(); ++i) r.exps[i] = std::max(a.exps[i], b.exps[i]);
    return r;
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.exps.size(); ++i)
        if (a.exps[i] > 0 && b.exps[i] > 0) return false;
    return true;
}

// -------------------------------------------------------------- MonomialOrder

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    const std::size_t n = vars_.size();
    if (a.exps.size() != n || b.exps.size() != n)
        throw std::invalid_argument("monomial arity does not match order");
    if (kind_ != OrderKind::lex) {
        const int da = a.degree(), db = b.degree();
        if (da != db) return da <=> db;
    }
    if (kind_ == OrderKind::grevlex) {
        // Tie at equal degree: scanning from the least variable upward, the
        // monomial with the smaller exponent at the first difference wins.
        for (std::size_t i = n; i-- > 0;) {
            if (a.exps[i] != b.exps[i])
                return a.exps[i] < b.exps[i] ? std::strong_ordering::greater : std::strong_ordering::less;
        }
        return std::strong_ordering::equal;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (a.exps[i] != b.exps[i]) return a.exps[i] <=> b.exps[i];
    }
    return std::strong_ordering::equal;
}

MonomialOrder grevlex(const VariableSet& vars) { return {OrderKind::grevlex, vars}; }
MonomialOrder grlex(const VariableSet& vars) { return {OrderKind::grlex, vars}; }
MonomialOrder lex(const VariableSet& vars) { return {OrderKind::lex, vars}; }

// ------------------------------------------------------------------ MultiPoly

MultiPoly MultiPoly::constant(VariableSet vars, Rational c) {
    MultiPoly p(std::move(vars));
    if (c != 0) p.terms_.emplace(Monomial(p.vars_.size()), std::move(c));
    return p;
}

MultiPoly MultiPoly::variable(const VariableSet& vars, std::string_view name, int power) {
    MultiPoly p(vars);
    Monomial m(vars.size());
    m.exps[vars.index_of(name)] = power;
    p.terms_.emplace(std::move(m), Rational(1));
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

Rational MultiPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw std::logic_error("constant_value on non-constant polynomial");
    return terms_.begin()->second;
}

int MultiPoly::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

int MultiPoly::degree_in(std::size_t var) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exps[var]);
    return d;
}

int MultiPoly::block_degree(std::span<const std::size_t> block) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree_in(block));
    return d;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
    if (m.exps.size() != vars_.size()) throw std::invalid_argument("monomial arity mismatch");
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void MultiPoly::align(const MultiPoly& a, const MultiPoly& b, MultiPoly& la, MultiPoly& lb) {
    if (a.vars_ == b.vars_) {
        la = a;
        lb = b;
    } else if (a.vars_.embeds_into(b.vars_)) {
        la = a.lift(b.vars_);
        lb = b;
    } else if (b.vars_.embeds_into(a.vars_)) {
        la = a;
        lb = b.lift(a.vars_);
    } else {
        throw std::invalid_argument("variable sets do not embed into one another");
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(vars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly a, b;
    align(*this, o, a, b);
    for (const auto& [m, c] : b.terms_) a.add_term(m, c);
    return a;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly a, b;
    align(*this, o, a, b);
    for (const auto& [m, c] : b.terms_) a.add_term(m, -c);
    return a;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly a, b;
    align(*this, o, a, b);
    MultiPoly r(a.vars_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

MultiPoly MultiPoly::operator*(const Rational& c) const {
    MultiPoly r(vars_);
    if (c == 0) return r;
    for (const auto& [m, coef] : terms_) r.terms_.emplace(m, coef * c);
    return r;
}

MultiPoly MultiPoly::operator/(const Rational& c) const {
    if (c == 0) throw std::invalid_argument("division by zero");
    return *this * (Rational(1) / c);
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly r = constant(vars_, Rational(1));
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1u) r = r * base;
        base = base * base;
        e >>= 1u;
    }
    return r;
}

std::pair<Monomial, Rational> MultiPoly::leading_term(const MonomialOrder& order) const {
    if (terms_.empty()) throw std::logic_error("leading_term of zero polynomial");
    if (order.vars() != vars_) throw std::invalid_argument("order variables differ from polynomial variables");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (order.greater(it->first, best->first)) best = it;
    return {best->first, best->second};
}

Monomial MultiPoly::leading_monomial(const MonomialOrder& order) const { return leading_term(order).first; }

MultiPoly MultiPoly::monic(const MonomialOrder& order) const {
    if (is_zero()) return *this;
    return *this * (Rational(1) / leading_term(order).second);
}

MultiPoly MultiPoly::substitute(std::size_t var, const Rational& value) const {
    MultiPoly r(vars_);
    for (const auto& [m, c] : terms_) {
        Rational coef = c;
        for (int e = 0; e < m.exps[var]; ++e) coef *= value;
        Monomial nm = m;
        nm.exps[var] = 0;
        r.add_term(nm, coef);
    }
    return r;
}

MultiPoly MultiPoly::substitute(std::size_t var, const MultiPoly& replacement) const {
    if (replacement.vars_ != vars_) throw std::invalid_argument("substitute: variable set mismatch");
    MultiPoly r(vars_);
    for (const auto& [m, c] : terms_) {
        Monomial nm = m;
        const int e = nm.exps[var];
        nm.exps[var] = 0;
        MultiPoly term(vars_);
        term.terms_.emplace(nm, c);
        r = r + term * replacement.pow(static_cast<unsigned>(e));
    }
    return r;
}

MultiPoly MultiPoly::lift(const VariableSet& target) const {
    std::vector<std::size_t> map(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) map[i] = target.index_of(vars_.name(i));
    MultiPoly r(target);
    for (const auto& [m, c] : terms_) {
        Monomial nm(target.size());
        for (std::size_t i = 0; i < vars_.size(); ++i) nm.exps[map[i]] = m.exps[i];
        r.terms_.emplace(std::move(nm), c);
    }
    return r;
}

MultiPoly MultiPoly::restrict_to(const VariableSet& target) const {
    std::vector<std::ptrdiff_t> map(vars_.size(), -1);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (auto j = target.index(vars_.name(i))) map[i] = static_cast<std::ptrdiff_t>(*j);
    }
    MultiPoly r(target);
    for (const auto& [m, c] : terms_) {
        Monomial nm(target.size());
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (m.exps[i] == 0) continue;
            if (map[i] < 0)
                throw std::invalid_argument("restrict_to: polynomial uses dropped variable " + vars_.name(i));
            nm.exps[static_cast<std::size_t>(map[i])] = m.exps[i];
        }
        r.terms_.emplace(std::move(nm), c);
    }
    return r;
}

Rational MultiPoly::eval(std::span<const Rational> point) const {
    if (point.size() != vars_.size()) throw std::invalid_argument("eval: point arity mismatch");
    Rational sum(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < point.size(); ++i)
            for (int e = 0; e < m.exps[i]; ++e) t *= point[i];
        sum += t;
    }
    return sum;
}

std::complex<double> MultiPoly::eval(std::span<const std::complex<double>> point) const {
    if (point.size() != vars_.size()) throw std::invalid_argument("eval: point arity mismatch");
    std::complex<double> sum(0.0, 0.0);
    for (const auto& [m, c] : terms_) {
        std::complex<double> t(to_double(c), 0.0);
        for (std::size_t i = 0; i < point.size(); ++i)
            for (int e = 0; e < m.exps[i]; ++e) t *= point[i];
        sum += t;
    }
    return sum;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    const MonomialOrder order = grevlex(vars_);
    std::vector<const std::pair<const Monomial, Rational>*> sorted;
    sorted.reserve(terms_.size());
    for (const auto& t : terms_) sorted.push_back(&t);
    std::sort(sorted.begin(), sorted.end(),
              [&](auto* a, auto* b) { return order.greater(a->first, b->first); });
    std::ostringstream out;
    bool first = true;
    for (auto* t : sorted) {
        Rational c = t->second;
        if (first) {
            if (c < 0) {
                out << "-";
                c = -c;
            }
        } else {
            out << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        bool need_star = false;
        if (c != 1 || t->first.degree() == 0) {
            out << rational_str(c);
            need_star = true;
        }
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            const int e = t->first.exps[i];
            if (e == 0) continue;
            if (need_star) out << "*";
            out << vars_.name(i);
            if (e > 1) out << "^" << e;
            need_star = true;
        }
    }
    return out.str();
}

// -------------------------------------------------------------- homogenization

MultiPoly homogenize(const MultiPoly& p, const std::vector<std::string>& block, const std::string& new_var) {
    if (p.vars().contains(new_var)) throw std::invalid_argument("homogenize: variable already present: " + new_var);
    std::vector<std::size_t> block_idx;
    for (const auto& n : block) block_idx.push_back(p.vars().index_of(n));
    std::size_t insert_pos = 0;
    for (std::size_t i : block_idx) insert_pos = std::max(insert_pos, i + 1);
    const VariableSet target = p.vars().with_inserted(insert_pos, new_var);
    MultiPoly lifted = p.lift(target);
    if (lifted.is_zero()) return lifted;

    const std::size_t zi = target.index_of(new_var);
    std::vector<std::size_t> lifted_block;
    for (const auto& n : block) lifted_block.push_back(target.index_of(n));
    const int d = lifted.block_degree(lifted_block);

    MultiPoly r(target);
    for (const auto& [m, c] : lifted.terms()) {
        Monomial nm = m;
        nm.exps[zi] = d - m.degree_in(lifted_block);
        r.add_term(nm, c);
    }
    return r;
}

MultiPoly dehomogenize(const MultiPoly& p, const std::string& var) {
    const std::size_t vi = p.vars().index_of(var);
    return p.substitute(vi, Rational(1)).restrict_to(p.vars().with_removed(vi));
}

}  // namespace pjrl
