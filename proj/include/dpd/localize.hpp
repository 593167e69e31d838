#ifndef DPD_LOCALIZE_HPP
#define DPD_LOCALIZE_HPP

#include <cstdint>
#include <memory>
#include <string>

#include "dpd/poly.hpp"
#include "dpd/weyl.hpp"

namespace dpd {

// Fixes the denominator f (nonzero) of a localization R_f, together with its
// degree d. Fractions are only comparable within one context.
class LocalizedContext {
  public:
    explicit LocalizedContext(Polynomial f);

    const Polynomial& denominator() const noexcept { return f_; }
    std::int64_t denominator_degree() const noexcept { return d_; } // d = deg f
    std::size_t vars() const noexcept { return f_.vars(); }
    Field field() const noexcept { return f_.field(); }

    Polynomial denominator_power(std::uint32_t j) const; // f^j

    friend bool operator==(const LocalizedContext& a, const LocalizedContext& b) {
        return a.f_ == b.f_;
    }

  private:
    Polynomial f_;
    std::int64_t d_;
};

using ContextPtr = std::shared_ptr<const LocalizedContext>;

ContextPtr make_context(Polynomial f);

// num / f^exp against a fixed context. Representations are not unique:
// equality is semantic, by cross-multiplication. A zero numerator always
// normalizes to exponent 0.
class Fraction {
  public:
    Fraction(Polynomial num, std::uint32_t exp, ContextPtr ctx);

    static Fraction zero(const ContextPtr& ctx);
    static Fraction of_polynomial(Polynomial g, ContextPtr ctx); // g / f^0
    static Fraction inverse_denominator(const ContextPtr& ctx);  // 1 / f^1

    const Polynomial& numerator() const noexcept { return num_; }
    std::uint32_t exponent() const noexcept { return exp_; }
    const ContextPtr& context() const noexcept { return ctx_; }
    bool is_zero() const noexcept { return num_.is_zero(); }

    // u = v in R_f, i.e. u.num * f^{v.exp} = v.num * f^{u.exp} (R is a domain).
    bool semantically_equal(const Fraction& v) const;

    // Common-denominator arithmetic; the exponent only grows.
    friend Fraction operator+(const Fraction& u, const Fraction& v);
    friend Fraction operator-(const Fraction& u, const Fraction& v);
    Fraction operator-() const;
    Fraction scaled(const Polynomial& g) const;
    Fraction scaled(const Scalar& c) const;

    std::string str() const; // "<poly>/f^<j>"

  private:
    Polynomial num_;
    std::uint32_t exp_;
    ContextPtr ctx_;
};

void check_same_context(const Fraction& u, const Fraction& v);

// The divided-power action on R_f, by recursion on the order t:
//   D_t(m / f^j) = f^{-j} D_t(m) - sum_{s=1..t} f^{-j} D_s(f^j) D_{t-s}(m / f^j),
// assembled over the common denominator f^{j+t}. For s <= j the factor
// D_s(f^j) is exactly divisible by f^{j-s}; a failure of that division is a
// library bug and throws std::logic_error. Results carry exponent j + t
// (exponent 0 when j = 0, where the recursion collapses to the plain
// polynomial derivative).
Fraction divided_derivative(const Fraction& u, std::uint32_t t, std::size_t var);

// Apply a whole operator: x^a D^b acts by the divided-power action for each
// D factor, then numerator multiplication by x^a; extended k-linearly.
Fraction apply(const DiffOp& a, const Fraction& u);

// Membership in level `level` of the standard filtration on R_f induced by
// the degree filtration on R: u is in level i iff u = m / f^i with
// deg m <= i*(d+1). Decidable exactly because the candidate numerator is
// unique: scale up when u.exp <= i, divide exactly when u.exp > i.
bool in_filtration_level(const Fraction& u, std::uint32_t level);

} // namespace dpd

#endif
