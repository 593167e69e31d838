#include "dpd/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace dpd {

std::uint64_t Monomial::degree() const noexcept {
    std::uint64_t d = 0;
    for (auto e : e_) d += e;
    return d;
}

Monomial Monomial::times(const Monomial& m) const {
    if (e_.size() != m.e_.size()) throw std::invalid_argument("monomial ambient mismatch");
    std::vector<std::uint32_t> r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) r[i] = e_[i] + m.e_[i];
    return Monomial(std::move(r));
}

bool Monomial::divides(const Monomial& m) const {
    if (e_.size() != m.e_.size()) throw std::invalid_argument("monomial ambient mismatch");
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (e_[i] > m.e_[i]) return false;
    }
    return true;
}

Monomial Monomial::quotient_into(const Monomial& m) const {
    std::vector<std::uint32_t> r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) r[i] = m.e_[i] - e_[i];
    return Monomial(std::move(r));
}

bool GrlexLess::operator()(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) const {
    std::uint64_t da = 0, db = 0;
    for (auto e : a) da += e;
    for (auto e : b) db += e;
    if (da != db) return da < db;
    return a < b; // lexicographic tie-break
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
    return (*this)(a.exps(), b.exps());
}

Polynomial Polynomial::constant(std::size_t nvars, const Scalar& c) {
    Polynomial p(nvars, c.field());
    p.add_term(Monomial(nvars), c);
    return p;
}

Polynomial Polynomial::of_int(std::size_t nvars, std::int64_t v, Field f) {
    return constant(nvars, Scalar::of_int(v, f));
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t var, Field f) {
    if (var >= nvars) throw std::invalid_argument("variable index out of range");
    std::vector<std::uint32_t> e(nvars, 0);
    e[var] = 1;
    Polynomial p(nvars, f);
    p.add_term(Monomial(std::move(e)), Scalar::one(f));
    return p;
}

Polynomial Polynomial::monomial(Monomial m, const Scalar& c) {
    Polynomial p(m.vars(), c.field());
    p.add_term(std::move(m), c);
    return p;
}

std::int64_t Polynomial::degree() const noexcept {
    if (terms_.empty()) return -1;
    // leading term w.r.t. grlex has the max total degree
    return static_cast<std::int64_t>(terms_.rbegin()->first.degree());
}

Scalar Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
    if (m.vars() != n_) throw std::invalid_argument("monomial ambient mismatch");
    if (c.field() != field_) throw std::invalid_argument("coefficient field mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Polynomial::check_compatible(const Polynomial& a, const Polynomial& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("polynomial ambient mismatch");
    if (a.field_ != b.field_) throw std::invalid_argument("polynomial field mismatch");
}

Polynomial Polynomial::operator-() const {
    Polynomial r(n_, field_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial::check_compatible(a, b);
    Polynomial r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    Polynomial::check_compatible(a, b);
    Polynomial r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial::check_compatible(a, b);
    Polynomial r(a.n_, a.field_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            r.add_term(ma.times(mb), ca * cb);
        }
    }
    return r;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
    if (c.field() != field_) throw std::invalid_argument("scalar field mismatch");
    Polynomial r(n_, field_);
    if (c.is_zero()) return r;
    for (const auto& [m, t] : terms_) r.terms_.emplace(m, t * c);
    return r;
}

Polynomial Polynomial::pow(std::uint32_t e) const {
    Polynomial r = Polynomial::constant(n_, Scalar::one(field_));
    Polynomial base = *this;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

Scalar Polynomial::eval(const std::vector<Scalar>& point) const {
    if (point.size() != n_) throw std::invalid_argument("evaluation point has wrong arity");
    Scalar acc = Scalar::zero(field_);
    for (const auto& [m, c] : terms_) {
        Scalar v = c;
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::uint32_t e = 0; e < m.exp(i); ++e) v *= point[i];
        }
        acc += v;
    }
    return acc;
}

Polynomial Polynomial::shifted(const std::vector<Scalar>& c) const {
    if (c.size() != n_) throw std::invalid_argument("shift vector has wrong arity");
    Polynomial r(n_, field_);
    for (const auto& [m, coef] : terms_) {
        Polynomial term = Polynomial::constant(n_, coef);
        for (std::size_t i = 0; i < n_; ++i) {
            if (m.exp(i) == 0) continue;
            Polynomial xi = Polynomial::variable(n_, i, field_) + Polynomial::constant(n_, c[i]);
            term *= xi.pow(m.exp(i));
        }
        r += term;
    }
    return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    Polynomial::check_compatible(a, b);
    return a.terms_ == b.terms_;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // descending grlex
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Monomial& m = it->first;
        Scalar c = it->second;
        bool negative = false;
        if (field_.is_rational() && c.rat() < 0) {
            negative = true;
            c = -c;
        }
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        bool has_vars = m.degree() > 0;
        if (!has_vars) {
            out << c.str();
            continue;
        }
        bool printed = false;
        if (!c.is_one()) {
            out << c.str();
            printed = true;
        }
        for (std::size_t i = 0; i < n_; ++i) {
            if (m.exp(i) == 0) continue;
            if (printed) out << "*";
            out << "x" << (i + 1);
            if (m.exp(i) > 1) out << "^" << m.exp(i);
            printed = true;
        }
    }
    return out.str();
}

Polynomial divided_derivative(const Polynomial& g, std::uint32_t t, std::size_t var) {
    if (var >= g.vars()) throw std::invalid_argument("variable index out of range");
    if (t == 0) return g;
    Polynomial r(g.vars(), g.field());
    for (const auto& [m, c] : g.terms()) {
        std::uint32_t v = m.exp(var);
        if (v < t) continue;
        Scalar b = binomial_in(v, t, g.field());
        if (b.is_zero()) continue;
        std::vector<std::uint32_t> e = m.exps();
        e[var] = v - t;
        r.add_term(Monomial(std::move(e)), c * b);
    }
    return r;
}

std::optional<Polynomial> divide_exact(const Polynomial& g, const Polynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    if (g.vars() != f.vars() || g.field() != f.field()) {
        throw std::invalid_argument("polynomial ambient mismatch");
    }
    Polynomial q(g.vars(), g.field());
    Polynomial rem = g;
    const auto& flead = *f.terms().rbegin();
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms().rbegin();
        if (!flead.first.divides(rlead.first)) return std::nullopt;
        Monomial qm = flead.first.quotient_into(rlead.first);
        Scalar qc = rlead.second / flead.second;
        Polynomial qterm = Polynomial::monomial(qm, qc);
        q += qterm;
        rem -= qterm * f;
    }
    return q;
}

} // namespace dpd
