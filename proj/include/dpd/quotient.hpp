#ifndef DPD_QUOTIENT_HPP
#define DPD_QUOTIENT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dpd/weyl.hpp"

namespace dpd {

// A k-rational point c, standing for the maximal ideal (x_1-c_1,...,x_n-c_n).
class RationalPoint {
  public:
    explicit RationalPoint(std::vector<Scalar> coords);
    static RationalPoint origin(std::size_t nvars, Field f);

    std::size_t vars() const noexcept { return c_.size(); }
    Field field() const noexcept { return field_; }
    const std::vector<Scalar>& coords() const noexcept { return c_; }
    bool is_origin() const;

  private:
    std::vector<Scalar> c_;
    Field field_;
};

// Element of the cyclic quotient of the operator ring by the left ideal
// generated by a k-rational maximal ideal. The classes of the pure
// D-monomials form a k-basis, so structural equality is equality.
class QuotientElem {
  public:
    using TermMap = std::map<std::vector<std::uint32_t>, Scalar, GrlexLess>;

    QuotientElem(std::size_t nvars, Field f) : n_(nvars), field_(f) {}

    static QuotientElem zero(std::size_t nvars, Field f) { return QuotientElem(nvars, f); }
    static QuotientElem one(std::size_t nvars, Field f); // the class of 1
    static QuotientElem basis(std::vector<std::uint32_t> dexp, Field f);

    std::size_t vars() const noexcept { return n_; }
    Field field() const noexcept { return field_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add_term(const std::vector<std::uint32_t>& dexp, const Scalar& c);

    QuotientElem operator-() const;
    friend QuotientElem operator+(const QuotientElem& a, const QuotientElem& b);
    friend QuotientElem operator-(const QuotientElem& a, const QuotientElem& b);
    QuotientElem& operator+=(const QuotientElem& b) { return *this = *this + b; }
    QuotientElem scaled(const Scalar& c) const;

    // Lift to the operator ring as a combination of pure D-monomials.
    DiffOp lift() const;

    friend bool operator==(const QuotientElem& a, const QuotientElem& b);
    friend bool operator!=(const QuotientElem& a, const QuotientElem& b) { return !(a == b); }

    std::string str() const; // combinations of Dbar[t1,...,tn]

  private:
    std::size_t n_;
    Field field_;
    TermMap terms_;
};

// Class of an operator in the quotient: write A = sum_b D^b g_b(x) in right
// normal form and evaluate each g_b at the point (x-polynomials on the right
// reduce to their value at c modulo the ideal).
QuotientElem reduce_mod_point_ideal(const DiffOp& a, const RationalPoint& pt);

// Left multiplication in the quotient; well defined since the ideal is a
// left ideal.
QuotientElem left_act(const DiffOp& a, const QuotientElem& z, const RationalPoint& pt);

// Least N such that the N-th power of the maximal ideal kills z, found by
// iterating left multiplication by the generators x_i - c_i.
std::uint32_t annihilator_power(const QuotientElem& z, const RationalPoint& pt);

struct SocleMultiplier {
    std::vector<std::uint32_t> exponents; // t with x^t z = value * class-of-1
    Scalar value;                         // nonzero
};

// A monomial multiplier sending a nonzero element onto the socle (the span
// of the class of 1). Picks a term of maximal total degree, grlex-largest on
// ties; the returned claim is re-verified internally via left_act.
// Coordinates are assumed already translated, i.e. the point is the origin.
SocleMultiplier socle_multiplier(const QuotientElem& z);

} // namespace dpd

#endif
