#include <doctest.h>

#include "dpd/localize.hpp"
#include "dpd/rng.hpp"
#include "oracles.hpp"

using namespace dpd;

namespace {

Fraction random_fraction(const ContextPtr& ctx, Rng& rng, std::uint32_t max_exp = 3) {
    Polynomial num = oracles::random_poly(ctx->vars(), ctx->field(), 4, 4, rng);
    return Fraction(num, static_cast<std::uint32_t>(rng.below(max_exp + 1)), ctx);
}

} // namespace

TEST_SUITE("localize") {

TEST_CASE("semantic equality by cross-multiplication") {
    Field q = Field::rationals();
    ContextPtr ctx = make_context(Polynomial::variable(1, 0, q));
    Polynomial x1 = Polynomial::variable(1, 0, q);
    Polynomial one = Polynomial::of_int(1, 1, q);

    CHECK(Fraction(x1, 1, ctx).semantically_equal(Fraction(one, 0, ctx)));
    CHECK_FALSE(Fraction(one, 1, ctx).semantically_equal(Fraction(one, 2, ctx)));
    CHECK(Fraction(Polynomial::zero(1, q), 3, ctx).semantically_equal(Fraction::zero(ctx)));

    ContextPtr other = make_context(x1 + one);
    CHECK_THROWS_AS((void)Fraction(one, 1, ctx).semantically_equal(Fraction(one, 1, other)),
                    std::invalid_argument);
}

TEST_CASE("zero numerator normalizes to exponent zero") {
    Field q = Field::rationals();
    ContextPtr ctx = make_context(Polynomial::variable(1, 0, q));
    Fraction z(Polynomial::zero(1, q), 3, ctx);
    CHECK(z.exponent() == 0);
    CHECK(z.is_zero());
}

TEST_CASE("common-denominator arithmetic") {
    Field q = Field::rationals();
    ContextPtr ctx = make_context(Polynomial::variable(1, 0, q));
    Polynomial x1 = Polynomial::variable(1, 0, q);
    Polynomial one = Polynomial::of_int(1, 1, q);

    // 1/x + 1/x^2 = (x+1)/x^2
    Fraction sum = Fraction(one, 1, ctx) + Fraction(one, 2, ctx);
    CHECK(sum.exponent() == 2);
    CHECK(sum.numerator() == x1 + one);

    // x * (1/x^2) keeps the exponent and is semantically 1/x
    Fraction v = Fraction(one, 2, ctx).scaled(x1);
    CHECK(v.exponent() == 2);
    CHECK(v.semantically_equal(Fraction(one, 1, ctx)));

    Rng rng(6);
    Fraction u = random_fraction(ctx, rng);
    CHECK((u - u).is_zero());
}

TEST_CASE("divided derivative of inverse powers") {
    for (std::uint64_t c : {0ull, 2ull, 5ull}) {
        Field k = Field::of_characteristic(c);
        ContextPtr ctx = make_context(Polynomial::variable(1, 0, k));
        Fraction invx = Fraction::inverse_denominator(ctx);

        Fraction d1 = divided_derivative(invx, 1, 0);
        CHECK(d1.exponent() == 2);
        CHECK(d1.semantically_equal(Fraction(Polynomial::of_int(1, -1, k), 2, ctx)));

        // D_t(1/x) = (-1)^t / x^{t+1}
        for (std::uint32_t t = 0; t <= 6; ++t) {
            Fraction dt = divided_derivative(invx, t, 0);
            std::int64_t sign = (t % 2 == 0) ? 1 : -1;
            CHECK(dt.semantically_equal(Fraction(Polynomial::of_int(1, sign, k), t + 1, ctx)));
        }
    }
}

// Independent oracle for the sign pattern: x * (1/x) = 1, so the product rule
// forces sum_s D_s(x) D_{t-s}(1/x) = D_t(1) = 0 for every t >= 1.
TEST_CASE("inverse pattern satisfies the product-rule recurrence") {
    Field q = Field::rationals();
    ContextPtr ctx = make_context(Polynomial::variable(1, 0, q));
    Polynomial x1 = Polynomial::variable(1, 0, q);
    Fraction invx = Fraction::inverse_denominator(ctx);
    for (std::uint32_t t = 1; t <= 6; ++t) {
        // D_t(x * 1/x) expands to x*D_t(1/x) + D_{t-1}(1/x)
        Fraction acc = divided_derivative(invx, t, 0).scaled(x1);
        acc = acc + divided_derivative(invx, t - 1, 0);
        CHECK(acc.semantically_equal(Fraction::zero(ctx)));
    }
}

TEST_CASE("order zero and polynomial fractions collapse to the poly module") {
    Field q = Field::rationals();
    ContextPtr ctx = make_context(Polynomial::variable(2, 0, q) * Polynomial::variable(2, 1, q)
                                  + Polynomial::of_int(2, 1, q));
    Rng rng(9);
    Fraction u = random_fraction(ctx, rng);
    CHECK(divided_derivative(u, 0, 0).semantically_equal(u));

    Polynomial g = oracles::random_poly(2, q, 4, 4, rng);
    Fraction pf = Fraction::of_polynomial(g, ctx);
    Fraction dg = divided_derivative(pf, 2, 1);
    CHECK(dg.exponent() == 0);
    CHECK(dg.numerator() == divided_derivative(g, 2, 1));

    CHECK_THROWS_AS(divided_derivative(u, 1, 5), std::invalid_argument);
}

TEST_CASE("product rule extends to the localization") {
    for (std::uint64_t c : {0ull, 2ull, 5ull}) {
        Field k = Field::of_characteristic(c);
        Polynomial f = Polynomial::variable(2, 0, k) * Polynomial::variable(2, 1, k)
                     + Polynomial::of_int(2, 1, k);
        ContextPtr ctx = make_context(f);
        Rng rng(21 + c);
        for (int it = 0; it < 25; ++it) {
            std::size_t var = rng.below(2);
            std::uint32_t t = 1 + static_cast<std::uint32_t>(rng.below(4));
            Polynomial g = oracles::random_poly(2, k, 3, 3, rng);
            Fraction u = random_fraction(ctx, rng, 2);
            Fraction lhs = divided_derivative(u.scaled(g), t, var);
            Fraction rhs = Fraction::zero(ctx);
            for (std::uint32_t s = 0; s <= t; ++s) {
                rhs = rhs + divided_derivative(u, t - s, var).scaled(divided_derivative(g, s, var));
            }
            CHECK(lhs.semantically_equal(rhs));
        }
    }
}

TEST_CASE("clearing the denominator recovers the polynomial action") {
    for (std::uint64_t c : {0ull, 3ull}) {
        Field k = Field::of_characteristic(c);
        Polynomial f = Polynomial::variable(2, 0, k).pow(2) + Polynomial::variable(2, 1, k);
        ContextPtr ctx = make_context(f);
        Rng rng(33 + c);
        for (int it = 0; it < 25; ++it) {
            std::size_t var = rng.below(2);
            std::uint32_t t = 1 + static_cast<std::uint32_t>(rng.below(4));
            std::uint32_t j = static_cast<std::uint32_t>(rng.below(3));
            Polynomial m = oracles::random_poly(2, k, 3, 3, rng);
            Fraction u(m * ctx->denominator_power(j), j, ctx); // f^j * (m/f^j) = m
            Fraction lhs = divided_derivative(u, t, var);
            Fraction rhs = Fraction::of_polynomial(divided_derivative(m, t, var), ctx);
            CHECK(lhs.semantically_equal(rhs));
        }
    }
}

TEST_CASE("module axioms: contraction and cross-variable commutation") {
    for (std::uint64_t c : {0ull, 2ull, 5ull}) {
        Field k = Field::of_characteristic(c);
        Polynomial f = Polynomial::variable(2, 0, k) * Polynomial::variable(2, 1, k)
                     + Polynomial::of_int(2, 1, k);
        ContextPtr ctx = make_context(f);
        Rng rng(44 + c);
        for (int it = 0; it < 20; ++it) {
            Fraction u = random_fraction(ctx, rng, 2);
            std::uint32_t t = static_cast<std::uint32_t>(rng.below(4));
            std::uint32_t s = static_cast<std::uint32_t>(rng.below(4));
            std::size_t var = rng.below(2);
            Fraction lhs = divided_derivative(divided_derivative(u, t, var), s, var);
            Fraction rhs = divided_derivative(u, s + t, var).scaled(binomial_in(s + t, s, k));
            CHECK(lhs.semantically_equal(rhs));

            Fraction ab = divided_derivative(divided_derivative(u, t, 0), s, 1);
            Fraction ba = divided_derivative(divided_derivative(u, s, 1), t, 0);
            CHECK(ab.semantically_equal(ba));
        }
    }
}

TEST_CASE("derivative powers of the denominator stay divisible, with the expected degree") {
    for (std::uint64_t c : {0ull, 2ull, 5ull}) {
        Field k = Field::of_characteristic(c);
        Rng rng(55 + c);
        for (int it = 0; it < 15; ++it) {
            std::size_t n = 1 + rng.below(2);
            Polynomial f = oracles::random_poly(n, k, 3, 3, rng);
            if (f.is_zero()) continue;
            std::int64_t d = f.degree();
            for (std::uint32_t j = 1; j <= 5; ++j) {
                for (std::uint32_t s = 1; s <= j; ++s) {
                    for (std::size_t var = 0; var < n; ++var) {
                        Polynomial ds = divided_derivative(f.pow(j), s, var);
                        auto fs = divide_exact(ds, f.pow(j - s));
                        REQUIRE(fs.has_value());
                        if (!fs->is_zero()) {
                            CHECK(fs->degree() <= d * static_cast<std::int64_t>(s)
                                                  - static_cast<std::int64_t>(s));
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("filtration membership") {
    Field q = Field::rationals();
    Polynomial f = Polynomial::variable(2, 0, q) * Polynomial::variable(2, 1, q)
                 + Polynomial::of_int(2, 1, q); // degree 2
    ContextPtr ctx = make_context(f);

    Fraction u3(Polynomial::variable(2, 0, q).pow(3), 1, ctx);
    CHECK(in_filtration_level(u3, 1)); // deg 3 <= 1*(2+1)

    Fraction u4(Polynomial::variable(2, 0, q).pow(4), 1, ctx);
    CHECK_FALSE(in_filtration_level(u4, 1));

    CHECK(in_filtration_level(Fraction::of_polynomial(Polynomial::of_int(2, 1, q), ctx), 0));

    // exponent above the level: decided by exact division of the numerator
    Fraction divisible(f * f * Polynomial::variable(2, 0, q), 3, ctx); // = x1/f
    CHECK(in_filtration_level(divisible, 1));
    Fraction stuck(Polynomial::variable(2, 0, q), 3, ctx); // x1/f^3, f does not divide x1
    CHECK_FALSE(in_filtration_level(stuck, 1));
}

TEST_CASE("filtration levels absorb multiplication and derivatives") {
    for (std::uint64_t c : {0ull, 5ull}) {
        Field k = Field::of_characteristic(c);
        Polynomial f = Polynomial::variable(2, 0, k).pow(2) + Polynomial::variable(2, 1, k);
        ContextPtr ctx = make_context(f);
        const std::int64_t d1 = ctx->denominator_degree() + 1;
        Rng rng(66 + c);
        for (int it = 0; it < 25; ++it) {
            std::uint32_t j = static_cast<std::uint32_t>(rng.below(3));
            // element of level j: m/f^j with deg m <= j(d+1)
            Polynomial m = oracles::random_poly(2, k, static_cast<std::uint32_t>(j * d1), 4, rng);
            Fraction u(m, j, ctx);
            REQUIRE(in_filtration_level(u, j));
            for (std::size_t var = 0; var < 2; ++var) {
                Fraction xu = u.scaled(Polynomial::variable(2, var, k));
                CHECK(in_filtration_level(xu, j + 1));
                std::uint32_t t = 1 + static_cast<std::uint32_t>(rng.below(3));
                CHECK(in_filtration_level(divided_derivative(u, t, var), j + t));
            }
        }
    }
}

// Every fraction lands in the level forced by its degree and exponent:
// w + max(0, deg m - w(d+1)) for m/f^w.
TEST_CASE("the filtration exhausts the localization") {
    for (std::uint64_t c : {0ull, 3ull}) {
        Field k = Field::of_characteristic(c);
        Polynomial f = Polynomial::variable(2, 0, k) * Polynomial::variable(2, 1, k)
                     + Polynomial::of_int(2, 1, k);
        ContextPtr ctx = make_context(f);
        Rng rng(77 + c);
        for (int it = 0; it < 40; ++it) {
            Fraction u = random_fraction(ctx, rng);
            if (u.is_zero()) continue;
            std::int64_t overshoot = u.numerator().degree()
                - static_cast<std::int64_t>(u.exponent()) * (ctx->denominator_degree() + 1);
            std::uint32_t level = u.exponent()
                + static_cast<std::uint32_t>(std::max<std::int64_t>(0, overshoot));
            CHECK(in_filtration_level(u, level));
        }
    }
}

TEST_CASE("whole operators act on fractions") {
    Field q = Field::rationals();
    ContextPtr ctx = make_context(Polynomial::variable(1, 0, q));
    Fraction invx = Fraction::inverse_denominator(ctx);
    // (x*D_1)(1/x) = -1/x
    DiffOp a = DiffOp::of_polynomial(Polynomial::variable(1, 0, q))
             * DiffOp::derivative_generator(1, 0, 1, q);
    CHECK(apply(a, invx).semantically_equal(-invx));
    // identities and zero
    CHECK(apply(DiffOp::identity(1, q), invx).semantically_equal(invx));
    CHECK(apply(DiffOp::zero(1, q), invx).is_zero());
}

} // TEST_SUITE
