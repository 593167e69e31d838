#include <doctest.h>

#include "dpd/poly.hpp"
#include "dpd/rng.hpp"
#include "oracles.hpp"

using namespace dpd;

namespace {

Polynomial x(std::size_t n, std::size_t var, Field k) { return Polynomial::variable(n, var, k); }

} // namespace

TEST_SUITE("poly") {

TEST_CASE("ring arithmetic in canonical sparse form") {
    Field q = Field::rationals();
    Polynomial x1 = x(1, 0, q);
    Polynomial one = Polynomial::of_int(1, 1, q);

    CHECK((x1 + one) * (x1 - one) == x1 * x1 - one);

    Field f2 = Field::prime_field(2);
    Polynomial y = x(1, 0, f2);
    Polynomial oneb = Polynomial::of_int(1, 1, f2);
    // (x+1)^2 = x^2 + 1 in characteristic 2
    CHECK((y + oneb) * (y + oneb) == y * y + oneb);

    Polynomial f = x1 * x1 + x1.scaled(Scalar::of_int(3, q));
    CHECK(f + Polynomial::zero(1, q) == f);

    CHECK_THROWS_AS((void)(x1 + Polynomial::variable(2, 0, q)), std::invalid_argument);
    CHECK_THROWS_AS((void)(x1 + y), std::invalid_argument);
}

TEST_CASE("divided derivative on monomials") {
    Field q = Field::rationals();
    Polynomial g = x(1, 0, q).pow(5);

    // oracle: (1/2!) d^2/dx^2 (x^5) = 10 x^3
    Polynomial expect = oracles::iterated_derivative(g, 2, 0)
                            .scaled(Scalar::rational(1, 2));
    CHECK(divided_derivative(g, 2, 0) == expect);
    CHECK(divided_derivative(g, 2, 0) == x(1, 0, q).pow(3).scaled(Scalar::of_int(10, q)));

    Field f5 = Field::prime_field(5);
    Polynomial g5 = x(1, 0, f5).pow(5);
    CHECK(divided_derivative(g5, 2, 0).is_zero()); // 10 = 0 mod 5

    CHECK(divided_derivative(g, 0, 0) == g);

    Polynomial h = x(2, 0, q).pow(3);
    CHECK(divided_derivative(h, 1, 1).is_zero()); // independent variable

    CHECK_THROWS_AS(divided_derivative(g, 1, 3), std::invalid_argument);
}

TEST_CASE("degree with the zero sentinel") {
    Field q = Field::rationals();
    Polynomial p = x(2, 0, q) * x(2, 1, q) + Polynomial::of_int(2, 1, q);
    CHECK(p.degree() == 2);
    CHECK(Polynomial::zero(2, q).degree() == -1);
    CHECK(Polynomial::of_int(2, 7, q).degree() == 0);
}

TEST_CASE("exact division") {
    Field q = Field::rationals();
    Polynomial x1 = x(1, 0, q);
    Polynomial one = Polynomial::of_int(1, 1, q);

    auto quo = divide_exact(x1 * x1 - one, x1 - one);
    REQUIRE(quo.has_value());
    CHECK(*quo == x1 + one);

    CHECK_FALSE(divide_exact(x1 * x1 + one, x1).has_value());

    // chain-rule instance: D_1((x1 x2 + 1)^3) = 3 x2 (x1 x2 + 1)^2
    Field k = Field::rationals();
    Polynomial f = x(2, 0, k) * x(2, 1, k) + Polynomial::of_int(2, 1, k);
    Polynomial g = divided_derivative(f.pow(3), 1, 0);
    auto q2 = divide_exact(g, f.pow(2));
    REQUIRE(q2.has_value());
    CHECK(*q2 == x(2, 1, k).scaled(Scalar::of_int(3, k)));
    // oracle: expand both sides
    CHECK(g == f.pow(2) * x(2, 1, k).scaled(Scalar::of_int(3, k)));

    CHECK_THROWS_AS(divide_exact(x1, Polynomial::zero(1, q)), std::invalid_argument);
}

TEST_CASE("product rule for divided derivatives") {
    for (std::uint64_t c : {0ull, 2ull, 5ull}) {
        Field k = Field::of_characteristic(c);
        Rng rng(42 + c);
        for (int it = 0; it < 60; ++it) {
            std::size_t n = 1 + rng.below(3);
            std::size_t var = rng.below(n);
            std::uint32_t t = static_cast<std::uint32_t>(rng.below(6));
            Polynomial f = oracles::random_poly(n, k, 5, 4, rng);
            Polynomial g = oracles::random_poly(n, k, 5, 4, rng);
            Polynomial lhs = divided_derivative(f * g, t, var);
            Polynomial rhs(n, k);
            for (std::uint32_t s = 0; s <= t; ++s) {
                rhs += divided_derivative(f, s, var) * divided_derivative(g, t - s, var);
            }
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("composition contracts to a binomial multiple") {
    for (std::uint64_t c : {0ull, 2ull, 3ull}) {
        Field k = Field::of_characteristic(c);
        Rng rng(5 + c);
        for (int it = 0; it < 60; ++it) {
            std::size_t n = 1 + rng.below(2);
            std::size_t var = rng.below(n);
            std::uint32_t t = static_cast<std::uint32_t>(rng.below(5));
            std::uint32_t s = static_cast<std::uint32_t>(rng.below(5));
            Polynomial g = oracles::random_poly(n, k, 6, 4, rng);
            Polynomial lhs = divided_derivative(divided_derivative(g, t, var), s, var);
            Polynomial rhs = divided_derivative(g, s + t, var).scaled(binomial_in(s + t, s, k));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("exact division round-trips random products") {
    for (std::uint64_t c : {0ull, 5ull}) {
        Field k = Field::of_characteristic(c);
        Rng rng(99 + c);
        for (int it = 0; it < 60; ++it) {
            std::size_t n = 1 + rng.below(2);
            Polynomial qq = oracles::random_poly(n, k, 4, 4, rng);
            Polynomial f = oracles::random_poly(n, k, 3, 3, rng);
            if (f.is_zero()) continue;
            auto back = divide_exact(qq * f, f);
            REQUIRE(back.has_value());
            CHECK(*back == qq);
        }
    }
}

TEST_CASE("t! times the divided derivative is the iterated derivative (char 0)") {
    Field q = Field::rationals();
    Rng rng(123);
    for (int it = 0; it < 80; ++it) {
        std::size_t n = 1 + rng.below(3);
        std::size_t var = rng.below(n);
        std::uint32_t t = static_cast<std::uint32_t>(rng.below(6));
        Polynomial g = oracles::random_poly(n, q, 6, 5, rng);
        Scalar tfact = Scalar::of_integer(integer_factorial(t), q);
        CHECK(divided_derivative(g, t, var).scaled(tfact) == oracles::iterated_derivative(g, t, var));
    }
}

TEST_CASE("shift substitutes x_i -> x_i + c_i") {
    Field q = Field::rationals();
    Polynomial p = x(2, 0, q).pow(2) * x(2, 1, q) + x(2, 0, q);
    std::vector<Scalar> c = {Scalar::of_int(1, q), Scalar::of_int(-2, q)};
    Polynomial shifted = p.shifted(c);
    // oracle: evaluate both sides at a few points
    Rng rng(4);
    for (int it = 0; it < 20; ++it) {
        std::vector<Scalar> pt = {oracles::random_scalar(q, rng), oracles::random_scalar(q, rng)};
        std::vector<Scalar> moved = {pt[0] + c[0], pt[1] + c[1]};
        CHECK(shifted.eval(pt) == p.eval(moved));
    }
}

} // TEST_SUITE
