#include "dpd/localize.hpp"

#include <stdexcept>

namespace dpd {

LocalizedContext::LocalizedContext(Polynomial f) : f_(std::move(f)), d_(f_.degree()) {
    if (f_.is_zero()) throw std::invalid_argument("localization denominator must be nonzero");
}

Polynomial LocalizedContext::denominator_power(std::uint32_t j) const {
    return f_.pow(j);
}

ContextPtr make_context(Polynomial f) {
    return std::make_shared<const LocalizedContext>(std::move(f));
}

Fraction::Fraction(Polynomial num, std::uint32_t exp, ContextPtr ctx)
    : num_(std::move(num)), exp_(exp), ctx_(std::move(ctx)) {
    if (!ctx_) throw std::invalid_argument("fraction without a context");
    if (num_.vars() != ctx_->vars() || num_.field() != ctx_->field()) {
        throw std::invalid_argument("fraction numerator ambient mismatch");
    }
    if (num_.is_zero()) exp_ = 0;
}

Fraction Fraction::zero(const ContextPtr& ctx) {
    return Fraction(Polynomial::zero(ctx->vars(), ctx->field()), 0, ctx);
}

Fraction Fraction::of_polynomial(Polynomial g, ContextPtr ctx) {
    return Fraction(std::move(g), 0, std::move(ctx));
}

Fraction Fraction::inverse_denominator(const ContextPtr& ctx) {
    return Fraction(Polynomial::of_int(ctx->vars(), 1, ctx->field()), 1, ctx);
}

void check_same_context(const Fraction& u, const Fraction& v) {
    if (u.context() == v.context()) return;
    if (!(*u.context() == *v.context())) {
        throw std::invalid_argument("fraction context mismatch");
    }
}

bool Fraction::semantically_equal(const Fraction& v) const {
    check_same_context(*this, v);
    return num_ * ctx_->denominator_power(v.exp_) == v.num_ * ctx_->denominator_power(exp_);
}

Fraction operator+(const Fraction& u, const Fraction& v) {
    check_same_context(u, v);
    std::uint32_t e = std::max(u.exp_, v.exp_);
    const auto& ctx = *u.ctx_;
    Polynomial num = u.num_ * ctx.denominator_power(e - u.exp_)
                   + v.num_ * ctx.denominator_power(e - v.exp_);
    return Fraction(std::move(num), e, u.ctx_);
}

Fraction operator-(const Fraction& u, const Fraction& v) {
    check_same_context(u, v);
    std::uint32_t e = std::max(u.exp_, v.exp_);
    const auto& ctx = *u.ctx_;
    Polynomial num = u.num_ * ctx.denominator_power(e - u.exp_)
                   - v.num_ * ctx.denominator_power(e - v.exp_);
    return Fraction(std::move(num), e, u.ctx_);
}

Fraction Fraction::operator-() const {
    return Fraction(-num_, exp_, ctx_);
}

Fraction Fraction::scaled(const Polynomial& g) const {
    return Fraction(num_ * g, exp_, ctx_);
}

Fraction Fraction::scaled(const Scalar& c) const {
    return Fraction(num_.scaled(c), exp_, ctx_);
}

std::string Fraction::str() const {
    return num_.str() + "/f^" + std::to_string(exp_);
}

Fraction divided_derivative(const Fraction& u, std::uint32_t t, std::size_t var) {
    const ContextPtr& ctx = u.context();
    if (var >= ctx->vars()) throw std::invalid_argument("variable index out of range");
    if (t == 0) return u;
    const std::uint32_t j = u.exponent();
    if (j == 0) {
        return Fraction(divided_derivative(u.numerator(), t, var), 0, ctx);
    }
    const Polynomial fj = ctx->denominator_power(j);
    // g_s = f^{-(j-s)} D_s(f^j) for s <= j (exact by the divisibility of
    // derivative powers), and f^{s-j} D_s(f^j) above j; then
    //   numerator(order q) = f^q D_q(m) - sum_{s=1..q} g_s * numerator(order q-s)
    // over the common denominator f^{j+q}.
    std::vector<Polynomial> g;
    g.reserve(t);
    for (std::uint32_t s = 1; s <= t; ++s) {
        Polynomial ds = divided_derivative(fj, s, var); // D_s(f^j)
        if (s <= j) {
            if (ds.is_zero()) {
                g.push_back(std::move(ds));
                continue;
            }
            auto fs = divide_exact(ds, ctx->denominator_power(j - s));
            if (!fs.has_value()) {
                throw std::logic_error("derivative of a denominator power lost its guaranteed factor");
            }
            g.push_back(std::move(*fs));
        } else {
            g.push_back(ds * ctx->denominator_power(s - j));
        }
    }
    std::vector<Polynomial> tower;
    tower.reserve(t + 1);
    tower.push_back(u.numerator());
    for (std::uint32_t q = 1; q <= t; ++q) {
        Polynomial num = ctx->denominator_power(q) * divided_derivative(u.numerator(), q, var);
        for (std::uint32_t s = 1; s <= q; ++s) {
            if (g[s - 1].is_zero()) continue;
            num -= g[s - 1] * tower[q - s];
        }
        tower.push_back(std::move(num));
    }
    return Fraction(std::move(tower[t]), j + t, ctx);
}

Fraction apply(const DiffOp& a, const Fraction& u) {
    const ContextPtr& ctx = u.context();
    if (a.vars() != ctx->vars() || a.field() != ctx->field()) {
        throw std::invalid_argument("operator/fraction ambient mismatch");
    }
    Fraction acc = Fraction::zero(ctx);
    for (const auto& [m, c] : a.terms()) {
        Fraction v = u;
        for (std::size_t i = 0; i < a.vars(); ++i) {
            if (m.dexp(i) > 0) v = divided_derivative(v, m.dexp(i), i);
        }
        v = v.scaled(Polynomial::monomial(Monomial(m.xexps()), c));
        acc = acc + v;
    }
    return acc;
}

bool in_filtration_level(const Fraction& u, std::uint32_t level) {
    const auto& ctx = *u.context();
    const std::int64_t cap = static_cast<std::int64_t>(level) * (ctx.denominator_degree() + 1);
    if (u.exponent() <= level) {
        Polynomial m = u.numerator() * ctx.denominator_power(level - u.exponent());
        return m.degree() <= cap;
    }
    auto m = divide_exact(u.numerator(), ctx.denominator_power(u.exponent() - level));
    return m.has_value() && m->degree() <= cap;
}

} // namespace dpd
