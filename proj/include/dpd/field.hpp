#ifndef DPD_FIELD_HPP
#define DPD_FIELD_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace dpd {

bool is_prime_u64(std::uint64_t m) noexcept;

// Coefficient field descriptor: characteristic 0 means QQ, otherwise a
// machine-word prime p and the field is GF(p).
class Field {
  public:
    static Field rationals() noexcept { return Field(0); }
    static Field prime_field(std::uint64_t p);
    // 0 -> QQ, prime p -> GF(p); anything else is rejected.
    static Field of_characteristic(std::uint64_t c);

    std::uint64_t characteristic() const noexcept { return char_; }
    bool is_rational() const noexcept { return char_ == 0; }

    friend bool operator==(Field a, Field b) noexcept { return a.char_ == b.char_; }
    friend bool operator!=(Field a, Field b) noexcept { return a.char_ != b.char_; }

    std::string str() const; // "QQ" or "GF(p)"

  private:
    explicit Field(std::uint64_t c) noexcept : char_(c) {}
    std::uint64_t char_;
};

// An exact element of the field: a canonical rational over QQ, a canonical
// residue in [0, p) over GF(p). Immutable in spirit; all operations return
// fresh values. Mixing scalars from different fields throws.
class Scalar {
  public:
    Scalar() : field_(Field::rationals()) {} // rational zero

    static Scalar zero(Field f);
    static Scalar one(Field f);
    static Scalar of_int(std::int64_t v, Field f);
    static Scalar of_integer(const mpz_class& v, Field f);
    // QQ only; reduces to lowest terms, denominator made positive.
    static Scalar rational(const mpz_class& num, const mpz_class& den);

    Field field() const noexcept { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar inverse() const; // throws on zero

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // Value accessors for the rank engine; precondition on the field kind.
    const mpq_class& rat() const;
    std::uint64_t residue() const;

    std::string str() const;

  private:
    explicit Scalar(Field f) : field_(f) {}
    static void check_same_field(const Scalar& a, const Scalar& b);

    Field field_;
    mpq_class q_;            // used when field_ is QQ
    std::uint64_t r_ = 0;    // used when field_ is GF(p)
};

// C(v, t) computed exactly over the integers (0 when t > v).
mpz_class integer_binomial(std::uint64_t v, std::uint64_t t);

// The integer binomial coefficient mapped into k. This is the mechanism that
// makes divided powers exist in every characteristic.
Scalar binomial_in(std::uint64_t v, std::uint64_t t, Field k);

// n! as an exact integer.
mpz_class integer_factorial(std::uint64_t n);

} // namespace dpd

#endif
