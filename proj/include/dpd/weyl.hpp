#ifndef DPD_WEYL_HPP
#define DPD_WEYL_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dpd/poly.hpp"

namespace dpd {

// Normal-form operator monomial x^a * D^b: every x factor stands left of
// every divided-derivative factor. These monomials are a k-basis of the
// operator ring, so structural equality below is operator equality.
class OpMonomial {
  public:
    explicit OpMonomial(std::size_t nvars) : x_(nvars, 0), d_(nvars, 0) {}
    OpMonomial(std::vector<std::uint32_t> xexp, std::vector<std::uint32_t> dexp);

    std::size_t vars() const noexcept { return x_.size(); }
    std::uint32_t xexp(std::size_t var) const { return x_.at(var); }
    std::uint32_t dexp(std::size_t var) const { return d_.at(var); }
    const std::vector<std::uint32_t>& xexps() const noexcept { return x_; }
    const std::vector<std::uint32_t>& dexps() const noexcept { return d_; }

    // |a| + |b|: the level of the operator degree filtration.
    std::uint64_t bernstein_degree() const noexcept;

    friend bool operator==(const OpMonomial& a, const OpMonomial& b) {
        return a.x_ == b.x_ && a.d_ == b.d_;
    }
    friend bool operator!=(const OpMonomial& a, const OpMonomial& b) { return !(a == b); }

  private:
    std::vector<std::uint32_t> x_, d_;
};

struct OpGrlexLess {
    bool operator()(const OpMonomial& a, const OpMonomial& b) const;
};

// An element of the ring of k-linear differential operators of R, stored in
// left normal form (k-combination of x^a * D^b monomials).
class DiffOp {
  public:
    using TermMap = std::map<OpMonomial, Scalar, OpGrlexLess>;

    DiffOp(std::size_t nvars, Field f) : n_(nvars), field_(f) {}

    static DiffOp zero(std::size_t nvars, Field f) { return DiffOp(nvars, f); }
    static DiffOp identity(std::size_t nvars, Field f);
    static DiffOp of_scalar(std::size_t nvars, const Scalar& c);
    static DiffOp of_polynomial(const Polynomial& g);
    // The generator D_{t,var} (order-t divided derivative in one variable).
    static DiffOp derivative_generator(std::size_t nvars, std::size_t var, std::uint32_t t, Field f);
    static DiffOp monomial(OpMonomial m, const Scalar& c);

    std::size_t vars() const noexcept { return n_; }
    Field field() const noexcept { return field_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add_term(const OpMonomial& m, const Scalar& c);

    DiffOp operator-() const;
    friend DiffOp operator+(const DiffOp& a, const DiffOp& b);
    friend DiffOp operator-(const DiffOp& a, const DiffOp& b);
    // Composition in End_k(R), renormalized to x-left/D-right form via the
    // commutation relations; associative, and degree-submultiplicative.
    friend DiffOp operator*(const DiffOp& a, const DiffOp& b);
    DiffOp& operator+=(const DiffOp& b) { return *this = *this + b; }
    DiffOp& operator-=(const DiffOp& b) { return *this = *this - b; }
    DiffOp& operator*=(const DiffOp& b) { return *this = *this * b; }

    DiffOp scaled(const Scalar& c) const;

    // Evaluate the endomorphism on a polynomial.
    Polynomial apply(const Polynomial& g) const;

    // Least filtration level containing this operator; rejects zero (which
    // lies in every level).
    std::uint64_t bernstein_degree() const;

    // Substitution x_i -> x_i + c_i (a ring automorphism fixing the D's).
    DiffOp shifted(const std::vector<Scalar>& c) const;

    friend bool operator==(const DiffOp& a, const DiffOp& b);
    friend bool operator!=(const DiffOp& a, const DiffOp& b) { return !(a == b); }

    std::string str() const;

  private:
    static void check_compatible(const DiffOp& a, const DiffOp& b);

    std::size_t n_;
    Field field_;
    TermMap terms_;
};

// All normal-form monomials of bernstein degree <= level; the count is
// C(2n + level, 2n).
std::vector<OpMonomial> filtration_basis(std::uint32_t level, std::size_t nvars);

// A = sum_b D^b * g_b(x) with all D factors on the left: the free right
// R-module coordinates of A. Key = the D-exponent tuple b.
using RightNormalForm = std::map<std::vector<std::uint32_t>, Polynomial, GrlexLess>;

RightNormalForm right_normal_form(const DiffOp& a);

// Re-expand sum_b D^b * g_b via operator multiplication (round-trip check).
DiffOp expand_right_normal_form(const RightNormalForm& rnf, std::size_t nvars, Field f);

} // namespace dpd

#endif
