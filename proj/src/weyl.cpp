#include "dpd/weyl.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace dpd {

OpMonomial::OpMonomial(std::vector<std::uint32_t> xexp, std::vector<std::uint32_t> dexp)
    : x_(std::move(xexp)), d_(std::move(dexp)) {
    if (x_.size() != d_.size()) throw std::invalid_argument("x/D exponent arity mismatch");
}

std::uint64_t OpMonomial::bernstein_degree() const noexcept {
    std::uint64_t d = 0;
    for (auto e : x_) d += e;
    for (auto e : d_) d += e;
    return d;
}

bool OpGrlexLess::operator()(const OpMonomial& a, const OpMonomial& b) const {
    std::uint64_t da = a.bernstein_degree(), db = b.bernstein_degree();
    if (da != db) return da < db;
    if (a.xexps() != b.xexps()) return a.xexps() < b.xexps();
    return a.dexps() < b.dexps();
}

DiffOp DiffOp::identity(std::size_t nvars, Field f) {
    return of_scalar(nvars, Scalar::one(f));
}

DiffOp DiffOp::of_scalar(std::size_t nvars, const Scalar& c) {
    DiffOp a(nvars, c.field());
    a.add_term(OpMonomial(nvars), c);
    return a;
}

DiffOp DiffOp::of_polynomial(const Polynomial& g) {
    DiffOp a(g.vars(), g.field());
    for (const auto& [m, c] : g.terms()) {
        a.add_term(OpMonomial(m.exps(), std::vector<std::uint32_t>(g.vars(), 0)), c);
    }
    return a;
}

DiffOp DiffOp::derivative_generator(std::size_t nvars, std::size_t var, std::uint32_t t, Field f) {
    if (var >= nvars) throw std::invalid_argument("variable index out of range");
    std::vector<std::uint32_t> d(nvars, 0);
    d[var] = t;
    DiffOp a(nvars, f);
    a.add_term(OpMonomial(std::vector<std::uint32_t>(nvars, 0), std::move(d)), Scalar::one(f));
    return a;
}

DiffOp DiffOp::monomial(OpMonomial m, const Scalar& c) {
    DiffOp a(m.vars(), c.field());
    a.add_term(std::move(m), c);
    return a;
}

void DiffOp::add_term(const OpMonomial& m, const Scalar& c) {
    if (m.vars() != n_) throw std::invalid_argument("operator ambient mismatch");
    if (c.field() != field_) throw std::invalid_argument("coefficient field mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void DiffOp::check_compatible(const DiffOp& a, const DiffOp& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("operator ambient mismatch");
    if (a.field_ != b.field_) throw std::invalid_argument("operator field mismatch");
}

DiffOp DiffOp::operator-() const {
    DiffOp r(n_, field_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

DiffOp operator+(const DiffOp& a, const DiffOp& b) {
    DiffOp::check_compatible(a, b);
    DiffOp r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
}

DiffOp operator-(const DiffOp& a, const DiffOp& b) {
    DiffOp::check_compatible(a, b);
    DiffOp r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
}

DiffOp operator*(const DiffOp& a, const DiffOp& b) {
    DiffOp::check_compatible(a, b);
    const std::size_t n = a.n_;
    Field k = a.field_;
    DiffOp r(n, k);
    // Per term pair (x^a D^b) * (x^c D^d): commute each D_{b_i,i} past
    // x_i^{c_i} (the x/D exchange relation), then contract same-variable D
    // factors. Distinct variables commute, so the variables separate:
    //   sum over s <= min(b,c) componentwise of
    //     prod_i C(c_i, s_i) * C(b_i + d_i - s_i, d_i) * x^{a+c-s} D^{b+d-s}.
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Scalar base = ca * cb;
            std::vector<std::uint32_t> smax(n);
            for (std::size_t i = 0; i < n; ++i) {
                smax[i] = std::min(ma.dexp(i), mb.xexp(i));
            }
            std::vector<std::uint32_t> s(n, 0);
            while (true) {
                Scalar coef = base;
                for (std::size_t i = 0; i < n && !coef.is_zero(); ++i) {
                    if (s[i] > 0) coef *= binomial_in(mb.xexp(i), s[i], k);
                    coef *= binomial_in(ma.dexp(i) - s[i] + mb.dexp(i), mb.dexp(i), k);
                }
                if (!coef.is_zero()) {
                    std::vector<std::uint32_t> xe(n), de(n);
                    for (std::size_t i = 0; i < n; ++i) {
                        xe[i] = ma.xexp(i) + mb.xexp(i) - s[i];
                        de[i] = ma.dexp(i) + mb.dexp(i) - s[i];
                    }
                    r.add_term(OpMonomial(std::move(xe), std::move(de)), coef);
                }
                // odometer over 0 <= s <= smax
                std::size_t i = 0;
                while (i < n && s[i] == smax[i]) {
                    s[i] = 0;
                    ++i;
                }
                if (i == n) break;
                ++s[i];
            }
        }
    }
    return r;
}

DiffOp DiffOp::scaled(const Scalar& c) const {
    if (c.field() != field_) throw std::invalid_argument("scalar field mismatch");
    DiffOp r(n_, field_);
    if (c.is_zero()) return r;
    for (const auto& [m, t] : terms_) r.terms_.emplace(m, t * c);
    return r;
}

Polynomial DiffOp::apply(const Polynomial& g) const {
    if (g.vars() != n_ || g.field() != field_) {
        throw std::invalid_argument("operator/polynomial ambient mismatch");
    }
    Polynomial acc(n_, field_);
    for (const auto& [m, c] : terms_) {
        Polynomial h = g;
        for (std::size_t i = 0; i < n_; ++i) {
            if (m.dexp(i) > 0) h = divided_derivative(h, m.dexp(i), i);
            if (h.is_zero()) break;
        }
        if (h.is_zero()) continue;
        acc += h.scaled(c) * Polynomial::monomial(Monomial(m.xexps()), Scalar::one(field_));
    }
    return acc;
}

std::uint64_t DiffOp::bernstein_degree() const {
    if (terms_.empty()) {
        throw std::invalid_argument("bernstein degree of the zero operator (it lies in every level)");
    }
    return terms_.rbegin()->first.bernstein_degree();
}

DiffOp DiffOp::shifted(const std::vector<Scalar>& c) const {
    DiffOp r(n_, field_);
    for (const auto& [m, coef] : terms_) {
        Polynomial xpart = Polynomial::monomial(Monomial(m.xexps()), coef).shifted(c);
        for (const auto& [mono, c2] : xpart.terms()) {
            r.add_term(OpMonomial(mono.exps(), m.dexps()), c2);
        }
    }
    return r;
}

bool operator==(const DiffOp& a, const DiffOp& b) {
    DiffOp::check_compatible(a, b);
    return a.terms_ == b.terms_;
}

std::string DiffOp::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const OpMonomial& m = it->first;
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
        if (m.bernstein_degree() == 0) {
            out << c.str();
            continue;
        }
        bool printed = false;
        if (!c.is_one()) {
            out << c.str();
            printed = true;
        }
        for (std::size_t i = 0; i < n_; ++i) {
            if (m.xexp(i) == 0) continue;
            if (printed) out << "*";
            out << "x" << (i + 1);
            if (m.xexp(i) > 1) out << "^" << m.xexp(i);
            printed = true;
        }
        for (std::size_t i = 0; i < n_; ++i) {
            if (m.dexp(i) == 0) continue;
            if (printed) out << "*";
            out << "D[" << (i + 1) << "," << m.dexp(i) << "]";
            printed = true;
        }
    }
    return out.str();
}

namespace {

void enumerate_sum_at_most(std::uint32_t budget, std::size_t slots,
                           std::vector<std::uint32_t>& cur,
                           const std::function<void(const std::vector<std::uint32_t>&)>& emit) {
    if (cur.size() == slots) {
        emit(cur);
        return;
    }
    for (std::uint32_t v = 0; v <= budget; ++v) {
        cur.push_back(v);
        enumerate_sum_at_most(budget - v, slots, cur, emit);
        cur.pop_back();
    }
}

} // namespace

std::vector<OpMonomial> filtration_basis(std::uint32_t level, std::size_t nvars) {
    std::vector<OpMonomial> out;
    std::vector<std::uint32_t> cur;
    enumerate_sum_at_most(level, 2 * nvars, cur, [&](const std::vector<std::uint32_t>& t) {
        std::vector<std::uint32_t> xe(t.begin(), t.begin() + nvars);
        std::vector<std::uint32_t> de(t.begin() + nvars, t.end());
        out.emplace_back(std::move(xe), std::move(de));
    });
    return out;
}

namespace {

// Single-variable right normalization: x_i^w * D_{t,i} as a combination of
// D_{t',i} * x_i^{w'}. Derived by isolating x^w D_t in the exchange relation:
//   x^w D_t = D_t x^w - sum_{s=1..t} C(w,s) x^{w-s} D_{t-s}.
// Keys of the result are D orders, values are x_i powers with coefficients.
std::map<std::uint32_t, Polynomial> rnf_single(std::uint32_t w, std::uint32_t t, std::size_t var,
                                               std::size_t nvars, Field k,
                                               std::map<std::pair<std::uint32_t, std::uint32_t>,
                                                        std::map<std::uint32_t, Polynomial>>& memo) {
    auto key = std::make_pair(w, t);
    auto hit = memo.find(key);
    if (hit != memo.end()) return hit->second;

    std::map<std::uint32_t, Polynomial> out;
    std::vector<std::uint32_t> e(nvars, 0);
    e[var] = w;
    out.emplace(t, Polynomial::monomial(Monomial(e), Scalar::one(k)));
    for (std::uint32_t s = 1; s <= t && s <= w; ++s) {
        Scalar c = binomial_in(w, s, k);
        if (c.is_zero()) continue;
        auto inner = rnf_single(w - s, t - s, var, nvars, k, memo);
        for (const auto& [ord, poly] : inner) {
            auto [it, inserted] = out.emplace(ord, (-poly).scaled(c));
            if (!inserted) it->second -= poly.scaled(c);
        }
    }
    // drop zero coordinates
    for (auto it = out.begin(); it != out.end();) {
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    }
    memo.emplace(key, out);
    return out;
}

} // namespace

RightNormalForm right_normal_form(const DiffOp& a) {
    const std::size_t n = a.vars();
    Field k = a.field();
    RightNormalForm out;
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::map<std::uint32_t, Polynomial>> memo;
    for (const auto& [m, coef] : a.terms()) {
        // product over variables of single-variable forms; distinct
        // variables commute so the keys assemble componentwise
        std::vector<std::pair<std::vector<std::uint32_t>, Polynomial>> partial;
        partial.emplace_back(std::vector<std::uint32_t>(), Polynomial::constant(n, coef));
        for (std::size_t i = 0; i < n; ++i) {
            memo.clear();
            auto single = rnf_single(m.xexp(i), m.dexp(i), i, n, k, memo);
            std::vector<std::pair<std::vector<std::uint32_t>, Polynomial>> next;
            for (const auto& [prefix, acc] : partial) {
                for (const auto& [ord, poly] : single) {
                    auto ext = prefix;
                    ext.push_back(ord);
                    next.emplace_back(std::move(ext), acc * poly);
                }
            }
            partial = std::move(next);
        }
        for (auto& [dexp, poly] : partial) {
            if (poly.is_zero()) continue;
            auto [it, inserted] = out.emplace(dexp, poly);
            if (!inserted) {
                it->second += poly;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    return out;
}

DiffOp expand_right_normal_form(const RightNormalForm& rnf, std::size_t nvars, Field f) {
    DiffOp acc(nvars, f);
    for (const auto& [dexp, poly] : rnf) {
        DiffOp d = DiffOp::monomial(OpMonomial(std::vector<std::uint32_t>(nvars, 0), dexp),
                                    Scalar::one(f));
        acc += d * DiffOp::of_polynomial(poly);
    }
    return acc;
}

} // namespace dpd
