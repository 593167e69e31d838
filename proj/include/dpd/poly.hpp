#ifndef DPD_POLY_HPP
#define DPD_POLY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dpd/field.hpp"

namespace dpd {

// Exponent tuple of a fixed ambient variable count.
class Monomial {
  public:
    explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps) : e_(std::move(exps)) {}

    std::size_t vars() const noexcept { return e_.size(); }
    std::uint32_t exp(std::size_t var) const { return e_.at(var); }
    const std::vector<std::uint32_t>& exps() const noexcept { return e_; }

    std::uint64_t degree() const noexcept;

    Monomial times(const Monomial& m) const;
    bool divides(const Monomial& m) const; // this | m
    Monomial quotient_into(const Monomial& m) const; // m / this, caller checks divides

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e_ != b.e_; }

  private:
    std::vector<std::uint32_t> e_;
};

// Graded lexicographic order, used globally for term storage, printing and
// the exact-division reduction.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
    bool operator()(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) const;
};

// Sparse multivariate polynomial over an exact field. Canonical form: no
// zero coefficients stored, so structural equality is polynomial equality.
class Polynomial {
  public:
    using TermMap = std::map<Monomial, Scalar, GrlexLess>;

    Polynomial(std::size_t nvars, Field f) : n_(nvars), field_(f) {}

    static Polynomial zero(std::size_t nvars, Field f) { return Polynomial(nvars, f); }
    static Polynomial constant(std::size_t nvars, const Scalar& c);
    static Polynomial of_int(std::size_t nvars, std::int64_t v, Field f);
    static Polynomial variable(std::size_t nvars, std::size_t var, Field f);
    static Polynomial monomial(Monomial m, const Scalar& c);

    std::size_t vars() const noexcept { return n_; }
    Field field() const noexcept { return field_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    // Max total degree; -1 for the zero polynomial (sits below every
    // filtration level, which avoids a special case in membership tests).
    std::int64_t degree() const noexcept;

    Scalar coeff(const Monomial& m) const;
    void add_term(const Monomial& m, const Scalar& c); // merges, drops zeros

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
    Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
    Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

    Polynomial scaled(const Scalar& c) const;
    Polynomial pow(std::uint32_t e) const;

    Scalar eval(const std::vector<Scalar>& point) const;
    // Substitution x_i -> x_i + c_i.
    Polynomial shifted(const std::vector<Scalar>& c) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    std::string str() const;

  private:
    static void check_compatible(const Polynomial& a, const Polynomial& b);

    std::size_t n_;
    Field field_;
    TermMap terms_;
};

// The order-t divided derivative in variable `var`: the k-linear map sending
// x_var^v to C(v, t) * x_var^(v-t) (zero when t > v) and fixing the other
// variables. Order 0 is the identity.
Polynomial divided_derivative(const Polynomial& g, std::uint32_t t, std::size_t var);

// Quotient q with g = q*f when it exists. Leading-term reduction under the
// graded-lex order; each step strictly decreases the leading monomial.
std::optional<Polynomial> divide_exact(const Polynomial& g, const Polynomial& f);

} // namespace dpd

#endif
