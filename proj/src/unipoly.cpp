#include "pjrl/unipoly.hpp"

#include <algorithm>
#include <sstream>

namespace pjrl {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::constant(Rational c) {
    UniPoly p;
    if (c != 0) p.c_.push_back(std::move(c));
    return p;
}

UniPoly UniPoly::from_roots(std::span<const Rational> roots) {
    UniPoly p = constant(Rational(1));
    for (const auto& r : roots) p = p * UniPoly({-r, Rational(1)});
    return p;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Rational> c(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator-() const {
    std::vector<Rational> c(c_);
    for (auto& v : c) v = -v;
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Rational> c(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator*(const Rational& s) const {
    if (s == 0) return {};
    std::vector<Rational> c(c_);
    for (auto& v : c) v *= s;
    return UniPoly(std::move(c));
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return UniPoly(std::move(c));
}

Rational UniPoly::eval(const Rational& t) const {
    Rational v(0);
    for (std::size_t i = c_.size(); i-- > 0;) v = v * t + c_[i];
    return v;
}

double UniPoly::eval(double t) const {
    double v = 0.0;
    for (std::size_t i = c_.size(); i-- > 0;) v = v * t + to_double(c_[i]);
    return v;
}

std::complex<double> UniPoly::eval(std::complex<double> t) const {
    std::complex<double> v(0.0, 0.0);
    for (std::size_t i = c_.size(); i-- > 0;) v = v * t + to_double(c_[i]);
    return v;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
    if (d.is_zero()) throw std::invalid_argument("polynomial division by zero");
    UniPoly r = *this;
    if (r.degree() < d.degree()) return {{}, r};
    std::vector<Rational> q(static_cast<std::size_t>(r.degree() - d.degree()) + 1, Rational(0));
    while (!r.is_zero() && r.degree() >= d.degree()) {
        const std::size_t shift = static_cast<std::size_t>(r.degree() - d.degree());
        const Rational f = r.leading() / d.leading();
        q[shift] = f;
        for (std::size_t i = 0; i < d.c_.size(); ++i) r.c_[shift + i] -= f * d.c_[i];
        r.trim();
    }
    return {UniPoly(std::move(q)), r};
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return {};
    return *this * (Rational(1) / leading());
}

UniPoly UniPoly::primitive() const {
    if (is_zero()) return {};
    Integer den_lcm = 1;
    for (const auto& v : c_) den_lcm = boost::multiprecision::lcm(den_lcm, denom(v));
    Integer num_gcd = 0;
    std::vector<Rational> c(c_);
    for (auto& v : c) v *= Rational(den_lcm);
    for (const auto& v : c) num_gcd = boost::multiprecision::gcd(num_gcd, abs_int(numer(v)));
    if (num_gcd == 0) num_gcd = 1;
    for (auto& v : c) v /= Rational(num_gcd);
    UniPoly p(std::move(c));
    if (p.leading() < 0) p = -p;
    return p;
}

Rational UniPoly::root_bound() const {
    if (degree() < 1) return Rational(1);
    Rational m(0);
    for (std::size_t i = 0; i + 1 < c_.size(); ++i) {
        Rational a = c_[i] / leading();
        if (a < 0) a = -a;
        m = std::max(m, a);
    }
    return m + 1;
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::vector<std::pair<UniPoly, int>> UniPoly::squarefree_decomposition() const {
    std::vector<std::pair<UniPoly, int>> out;
    if (degree() < 1) return out;
    // Yun's algorithm over Q.
    const UniPoly p = monic();
    UniPoly g = gcd(p, p.derivative());
    UniPoly b = p.divmod(g).first;
    UniPoly c = p.derivative().divmod(g).first;
    UniPoly d = c - b.derivative();
    int mult = 1;
    while (b.degree() >= 1) {
        UniPoly a = gcd(b, d);
        if (a.degree() >= 1) out.emplace_back(a, mult);
        b = b.divmod(a).first;
        c = d.divmod(a).first;
        d = c - b.derivative();
        ++mult;
    }
    return out;
}

UniPoly UniPoly::squarefree_part() const {
    if (degree() < 1) return monic();
    return divmod(gcd(*this, derivative())).first.monic();
}

MultiPoly UniPoly::to_multipoly(const VariableSet& vars, std::string_view var) const {
    const std::size_t vi = vars.index_of(var);
    MultiPoly p(vars);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Monomial m(vars.size());
        m.exps[vi] = static_cast<int>(i);
        p.add_term(m, c_[i]);
    }
    return p;
}

UniPoly UniPoly::from_multipoly(const MultiPoly& p, std::size_t var) {
    std::vector<Rational> c(static_cast<std::size_t>(std::max(p.degree_in(var), 0)) + 1, Rational(0));
    for (const auto& [m, coef] : p.terms()) {
        for (std::size_t i = 0; i < m.exps.size(); ++i)
            if (i != var && m.exps[i] != 0)
                throw std::invalid_argument("from_multipoly: polynomial is not univariate in the given variable");
        c[static_cast<std::size_t>(m.exps[var])] = coef;
    }
    return UniPoly(std::move(c));
}

std::string UniPoly::str(const std::string& var) const {
    VariableSet vs({var});
    return to_multipoly(vs, var).str();
}

// ------------------------------------------------------------------ intervals

std::optional<int> RatInterval::sign() const {
    if (lo > 0) return 1;
    if (hi < 0) return -1;
    if (lo == 0 && hi == 0) return 0;
    return std::nullopt;
}

RatInterval RatInterval::operator+(const RatInterval& o) const { return {lo + o.lo, hi + o.hi}; }
RatInterval RatInterval::operator-(const RatInterval& o) const { return {lo - o.hi, hi - o.lo}; }
RatInterval RatInterval::operator-() const { return {-hi, -lo}; }

RatInterval RatInterval::operator*(const RatInterval& o) const {
    const Rational a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
    return {std::min(std::min(a, b), std::min(c, d)), std::max(std::max(a, b), std::max(c, d))};
}

RatInterval RatInterval::operator/(const RatInterval& o) const {
    if (o.contains_zero()) throw std::domain_error("interval division by interval containing zero");
    const RatInterval inv{Rational(1) / o.hi, Rational(1) / o.lo};
    return *this * inv;
}

RatInterval pow_interval(const RatInterval& x, int e) {
    RatInterval r{Rational(1), Rational(1)};
    for (int i = 0; i < e; ++i) r = r * x;
    // Even powers of sign-straddling intervals still have a nonnegative range.
    if (e % 2 == 0 && r.lo < 0) r.lo = 0;
    return r;
}

RatInterval eval_interval(const UniPoly& p, const RatInterval& x) {
    RatInterval v{Rational(0), Rational(0)};
    const auto& c = p.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) v = v * x + RatInterval(c[i]);
    return v;
}

// ------------------------------------------------------------- AlgebraicValue

AlgebraicValue::AlgebraicValue(UniPoly defining, Rational lo, Rational hi)
    : defining_(std::move(defining)), lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_ > hi_) throw std::invalid_argument("AlgebraicValue: inverted interval");
    const int slo = defining_.eval(lo_).sign();
    const int shi = defining_.eval(hi_).sign();
    if (slo == 0) {
        hi_ = lo_;
        defining_ = {};
        return;
    }
    if (shi == 0) {
        lo_ = hi_;
        defining_ = {};
        return;
    }
    if (slo == shi) throw std::invalid_argument("AlgebraicValue: no sign change on the interval");
}

AlgebraicValue AlgebraicValue::box(Rational lo, Rational hi) {
    if (lo > hi) throw std::invalid_argument("AlgebraicValue::box: inverted interval");
    AlgebraicValue v;
    v.lo_ = std::move(lo);
    v.hi_ = std::move(hi);
    v.boxed_ = v.lo_ != v.hi_;
    return v;
}

const Rational& AlgebraicValue::exact() const {
    if (!is_exact()) throw std::logic_error("AlgebraicValue is not exact");
    return lo_;
}

void AlgebraicValue::refine() {
    if (is_exact() || boxed_) return;
    const Rational mid = (lo_ + hi_) / 2;
    const int sm = defining_.eval(mid).sign();
    if (sm == 0) {  // landed on a rational root
        lo_ = hi_ = mid;
        defining_ = {};
        return;
    }
    if (sm == defining_.eval(lo_).sign())
        lo_ = mid;
    else
        hi_ = mid;
}

void AlgebraicValue::refine_below(const Rational& width) {
    while (!is_exact() && !boxed_ && hi_ - lo_ >= width) refine();
}

double AlgebraicValue::to_double() const {
    if (is_exact()) return pjrl::to_double(lo_);
    AlgebraicValue copy = *this;
    copy.refine_below(Rational(1, Integer(1) << 64));
    return pjrl::to_double((copy.lo_ + copy.hi_) / 2);
}

int AlgebraicValue::sign() const {
    if (is_exact()) return lo_ == 0 ? 0 : (lo_ > 0 ? 1 : -1);
    if (boxed_) {
        if (lo_ > 0) return 1;
        if (hi_ < 0) return -1;
        return 0;  // a box straddling zero is treated as zero
    }
    // Irrational roots are never zero, so refinement terminates.
    AlgebraicValue copy = *this;
    while (copy.lo_ <= 0 && copy.hi_ >= 0) copy.refine();
    return copy.lo_ > 0 ? 1 : -1;
}

std::vector<UniPoly> sturm_sequence(const UniPoly& p) {
    std::vector<UniPoly> seq;
    seq.push_back(p);
    seq.push_back(p.derivative());
    while (!seq.back().is_zero() && seq.back().degree() >= 0) {
        UniPoly r = seq[seq.size() - 2].divmod(seq.back()).second;
        if (r.is_zero()) break;
        seq.push_back(-r);
    }
    return seq;
}

int sign_variations(const std::vector<UniPoly>& seq, const Rational& at) {
    int variations = 0, prev = 0;
    for (const auto& p : seq) {
        const int s = p.eval(at).sign();
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

int count_real_roots(const UniPoly& p, const Rational& lo, const Rational& hi) {
    if (lo >= hi) return 0;
    const auto seq = sturm_sequence(p);
    return sign_variations(seq, lo) - sign_variations(seq, hi);
}

bool AlgebraicValue::same_value(const AlgebraicValue& other) const {
    if (is_exact() && other.is_exact()) return lo_ == other.lo_;
    if (boxed_ || other.boxed_) {
        // Boxes carry no algebraic identity; compare by interval overlap.
        return std::max(lo_, other.lo_) <= std::min(hi_, other.hi_);
    }
    if (is_exact() != other.is_exact()) {
        // Interval values are irrational by construction.
        return false;
    }
    const Rational lo = std::max(lo_, other.lo_);
    const Rational hi = std::min(hi_, other.hi_);
    if (lo > hi) return false;
    const UniPoly g = UniPoly::gcd(defining_, other.defining_);
    if (g.degree() < 1) return false;
    AlgebraicValue a = *this, b = other;
    a.refine_below(Rational(1, Integer(1) << 80));
    b.refine_below(Rational(1, Integer(1) << 80));
    const Rational l = std::max(a.lo_, b.lo_);
    const Rational h = std::min(a.hi_, b.hi_);
    if (l > h) return false;
    const auto seq = sturm_sequence(g);
    return sign_variations(seq, l) - sign_variations(seq, h) > 0 || g.eval(l) == 0 || g.eval(h) == 0;
}

}  // namespace pjrl
