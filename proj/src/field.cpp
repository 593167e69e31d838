#include "dpd/field.hpp"

#include <stdexcept>

namespace dpd {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<__uint128_t>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    // extended Euclid; p prime, a != 0 mod p
    std::int64_t t = 0, newt = 1;
    std::uint64_t r = p, newr = a % p;
    while (newr != 0) {
        std::uint64_t q = r / newr;
        std::int64_t tmpt = t - static_cast<std::int64_t>(q) * newt;
        t = newt;
        newt = tmpt;
        std::uint64_t tmpr = r - q * newr;
        r = newr;
        newr = tmpr;
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

} // namespace

bool is_prime_u64(std::uint64_t m) noexcept {
    if (m < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (m % q == 0) return m == q;
    }
    // deterministic Miller-Rabin for 64-bit inputs
    std::uint64_t d = m - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, m);
        if (x == 1 || x == m - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, m);
            if (x == m - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

Field Field::prime_field(std::uint64_t p) {
    if (!is_prime_u64(p)) {
        throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
    }
    return Field(p);
}

Field Field::of_characteristic(std::uint64_t c) {
    if (c == 0) return rationals();
    return prime_field(c);
}

std::string Field::str() const {
    if (char_ == 0) return "QQ";
    return "GF(" + std::to_string(char_) + ")";
}

Scalar Scalar::zero(Field f) {
    Scalar s(f);
    return s;
}

Scalar Scalar::one(Field f) {
    Scalar s(f);
    if (f.is_rational()) {
        s.q_ = 1;
    } else {
        s.r_ = 1 % f.characteristic();
    }
    return s;
}

Scalar Scalar::of_int(std::int64_t v, Field f) {
    Scalar s(f);
    if (f.is_rational()) {
        s.q_ = mpq_class(static_cast<long>(v));
    } else {
        std::uint64_t p = f.characteristic();
        if (v >= 0) {
            s.r_ = static_cast<std::uint64_t>(v) % p;
        } else {
            std::uint64_t m = static_cast<std::uint64_t>(-(v + 1)) + 1; // |v| without overflow
            s.r_ = (p - m % p) % p;
        }
    }
    return s;
}

Scalar Scalar::of_integer(const mpz_class& v, Field f) {
    Scalar s(f);
    if (f.is_rational()) {
        s.q_ = mpq_class(v);
    } else {
        mpz_class r;
        mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), f.characteristic());
        s.r_ = r.get_ui();
    }
    return s;
}

Scalar Scalar::rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Scalar s(Field::rationals());
    s.q_ = mpq_class(num, den);
    s.q_.canonicalize();
    return s;
}

bool Scalar::is_zero() const {
    return field_.is_rational() ? q_ == 0 : r_ == 0;
}

bool Scalar::is_one() const {
    return field_.is_rational() ? q_ == 1 : r_ == 1 % field_.characteristic();
}

void Scalar::check_same_field(const Scalar& a, const Scalar& b) {
    if (a.field_ != b.field_) {
        throw std::invalid_argument("scalar field mismatch: " + a.field_.str() + " vs " + b.field_.str());
    }
}

Scalar Scalar::operator-() const {
    Scalar s(field_);
    if (field_.is_rational()) {
        s.q_ = -q_;
    } else {
        s.r_ = r_ == 0 ? 0 : field_.characteristic() - r_;
    }
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::invalid_argument("inverse of zero");
    Scalar s(field_);
    if (field_.is_rational()) {
        s.q_ = 1 / q_;
    } else {
        s.r_ = invmod(r_, field_.characteristic());
    }
    return s;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    Scalar::check_same_field(a, b);
    Scalar s(a.field_);
    if (a.field_.is_rational()) {
        s.q_ = a.q_ + b.q_;
    } else {
        std::uint64_t p = a.field_.characteristic();
        std::uint64_t r = a.r_ + b.r_; // p fits a word, but guard the carry anyway
        if (r < a.r_ || r >= p) r -= p;
        s.r_ = r;
    }
    return s;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    Scalar::check_same_field(a, b);
    Scalar s(a.field_);
    if (a.field_.is_rational()) {
        s.q_ = a.q_ - b.q_;
    } else {
        std::uint64_t p = a.field_.characteristic();
        s.r_ = a.r_ >= b.r_ ? a.r_ - b.r_ : a.r_ + (p - b.r_);
    }
    return s;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar::check_same_field(a, b);
    Scalar s(a.field_);
    if (a.field_.is_rational()) {
        s.q_ = a.q_ * b.q_;
    } else {
        s.r_ = mulmod(a.r_, b.r_, a.field_.characteristic());
    }
    return s;
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    return a * b.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
    Scalar::check_same_field(a, b);
    return a.field_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
}

const mpq_class& Scalar::rat() const {
    if (!field_.is_rational()) throw std::logic_error("rat() on a GF(p) scalar");
    return q_;
}

std::uint64_t Scalar::residue() const {
    if (field_.is_rational()) throw std::logic_error("residue() on a QQ scalar");
    return r_;
}

std::string Scalar::str() const {
    if (field_.is_rational()) return q_.get_str();
    return std::to_string(r_);
}

mpz_class integer_binomial(std::uint64_t v, std::uint64_t t) {
    if (t > v) return 0;
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), v, t);
    return b;
}

Scalar binomial_in(std::uint64_t v, std::uint64_t t, Field k) {
    return Scalar::of_integer(integer_binomial(v, t), k);
}

mpz_class integer_factorial(std::uint64_t n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

} // namespace dpd
