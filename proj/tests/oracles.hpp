// Test-only oracles, independent of the library code paths they check.
#ifndef DPD_TESTS_ORACLES_HPP
#define DPD_TESTS_ORACLES_HPP

#include <cstdint>
#include <vector>

#include "dpd/field.hpp"
#include "dpd/poly.hpp"
#include "dpd/rng.hpp"

namespace oracles {

// Plain formal partial derivative d/dx_var, term by term. Used (iterated, then
// compared against t! times the divided derivative) as the char-0 oracle.
inline dpd::Polynomial formal_derivative(const dpd::Polynomial& g, std::size_t var) {
    dpd::Polynomial r(g.vars(), g.field());
    for (const auto& [m, c] : g.terms()) {
        std::uint32_t e = m.exp(var);
        if (e == 0) continue;
        auto exps = m.exps();
        exps[var] = e - 1;
        r.add_term(dpd::Monomial(exps), c * dpd::Scalar::of_int(static_cast<std::int64_t>(e), g.field()));
    }
    return r;
}

inline dpd::Polynomial iterated_derivative(dpd::Polynomial g, std::uint32_t t, std::size_t var) {
    for (std::uint32_t s = 0; s < t; ++s) g = formal_derivative(g, var);
    return g;
}

// C(a, b) mod p for digits a, b < p, via the multiplicative formula with
// modular inverses (no big integers involved).
inline std::uint64_t small_binom_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    if (b > a) return 0;
    auto mulmod = [p](std::uint64_t x, std::uint64_t y) {
        return static_cast<std::uint64_t>((static_cast<__uint128_t>(x) * y) % p);
    };
    auto powmod = [&](std::uint64_t x, std::uint64_t e) {
        std::uint64_t r = 1 % p;
        x %= p;
        while (e) {
            if (e & 1) r = mulmod(r, x);
            x = mulmod(x, x);
            e >>= 1;
        }
        return r;
    };
    std::uint64_t num = 1, den = 1;
    for (std::uint64_t i = 1; i <= b; ++i) {
        num = mulmod(num, (a - b + i) % p);
        den = mulmod(den, i % p);
    }
    return mulmod(num, powmod(den, p - 2)); // Fermat inverse, p prime
}

// Lucas' theorem: C(v, t) mod p = prod over base-p digits of C(v_i, t_i).
inline std::uint64_t lucas_binom_mod(std::uint64_t v, std::uint64_t t, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    while (v > 0 || t > 0) {
        std::uint64_t vd = v % p, td = t % p;
        r = static_cast<std::uint64_t>((static_cast<__uint128_t>(r) * small_binom_mod(vd, td, p)) % p);
        if (r == 0) return 0;
        v /= p;
        t /= p;
    }
    return r;
}

inline dpd::Scalar random_scalar(dpd::Field k, dpd::Rng& rng) {
    if (k.is_rational()) {
        std::int64_t num = rng.int_in(-9, 9);
        std::int64_t den = rng.int_in(1, 4);
        return dpd::Scalar::rational(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    }
    return dpd::Scalar::of_int(rng.int_in(0, static_cast<std::int64_t>(k.characteristic()) - 1), k);
}

inline dpd::Polynomial random_poly(std::size_t n, dpd::Field k, std::uint32_t maxdeg,
                                   std::size_t maxterms, dpd::Rng& rng) {
    dpd::Polynomial p(n, k);
    std::size_t terms = 1 + rng.below(maxterms);
    for (std::size_t j = 0; j < terms; ++j) {
        std::vector<std::uint32_t> e(n, 0);
        std::uint32_t budget = maxdeg;
        for (std::size_t i = 0; i < n; ++i) {
            e[i] = static_cast<std::uint32_t>(rng.below(budget + 1));
            budget -= e[i];
        }
        p.add_term(dpd::Monomial(e), random_scalar(k, rng));
    }
    return p;
}

} // namespace oracles

#endif
