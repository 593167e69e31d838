#include <doctest.h>

#include "dpd/error.hpp"
#include "dpd/filtration.hpp"
#include "dpd/rng.hpp"
#include "oracles.hpp"

using namespace dpd;

TEST_SUITE("filtration") {

TEST_CASE("span dimension of explicit vector sets") {
    Field q = Field::rationals();
    PolySpace ps{2, q};
    Polynomial one = Polynomial::of_int(2, 1, q);
    Polynomial x1 = Polynomial::variable(2, 0, q);
    CHECK(span_dim({Elem(one), Elem(x1), Elem(x1)}, ps) == 2); // duplicate
    CHECK(span_dim({}, ps) == 0);

    // {1/x, -1/x^2, 1/x^3} embedded with common denominator x^3
    ContextPtr ctx = make_context(Polynomial::variable(1, 0, q));
    Polynomial onev = Polynomial::of_int(1, 1, q);
    std::vector<Elem> vecs = {
        Fraction(onev, 1, ctx),
        Fraction(-onev, 2, ctx),
        Fraction(onev, 3, ctx),
    };
    CHECK(span_dim(vecs, FracSpace{ctx, 3}) == 3);

    // a fraction above the ambient level is rejected
    CHECK_THROWS_AS(span_dim({Elem(Fraction(onev, 3, ctx))}, FracSpace{ctx, 1}),
                    std::invalid_argument);
    // kind mismatch is rejected
    CHECK_THROWS_AS(span_dim({Elem(one)}, FracSpace{ctx, 1}), std::invalid_argument);
}

TEST_CASE("cyclic filtration of 1 in the polynomial ring") {
    Field q = Field::rationals();
    Polynomial one = Polynomial::of_int(2, 1, q);
    DimensionSeries s = cyclic_filtration_dims(Elem(one), PolySpace{2, q}, 4);
    std::vector<std::size_t> dims;
    for (auto& [i, d] : s.entries) {
        (void)i;
        dims.push_back(d);
    }
    // D-terms kill 1, so level i spans exactly the polynomials of degree <= i
    CHECK(dims == std::vector<std::size_t>{1, 3, 6, 10, 15});
    for (std::uint32_t i = 0; i <= 4; ++i) {
        CHECK(mpz_class(static_cast<unsigned long>(dims[i])) == integer_binomial(2 + i, i));
    }
}

TEST_CASE("cyclic filtration of the inverse variable") {
    for (std::uint64_t c : {0ull, 5ull}) {
        Field k = Field::of_characteristic(c);
        ContextPtr ctx = make_context(Polynomial::variable(1, 0, k));
        Fraction invx = Fraction::inverse_denominator(ctx);
        DimensionSeries s = cyclic_filtration_dims(Elem(invx), FracSpace{ctx, 0}, 4);
        for (auto& [i, d] : s.entries) {
            CHECK(d == 2 * static_cast<std::size_t>(i) + 1);
        }
    }
}

TEST_CASE("cyclic filtration of the quotient generator") {
    for (std::uint64_t c : {0ull, 5ull}) {
        Field k = Field::of_characteristic(c);
        for (std::size_t n = 1; n <= 2; ++n) {
            QuotSpace qs{RationalPoint::origin(n, k)};
            DimensionSeries s =
                cyclic_filtration_dims(Elem(QuotientElem::one(n, k)), qs, 4);
            for (auto& [i, d] : s.entries) {
                CHECK(mpz_class(static_cast<unsigned long>(d)) == integer_binomial(n + i, i));
            }
        }
    }
}

TEST_CASE("growth bounds hold for the standard witnesses over GF(2)") {
    Field k = Field::prime_field(2);
    auto all_above = [](const DimensionSeries& s) {
        for (const auto& c : check_lower_bound(s, 0)) {
            if (!c.pass) return false;
        }
        return true;
    };
    CHECK(all_above(cyclic_filtration_dims(Elem(Polynomial::of_int(2, 1, k)), PolySpace{2, k}, 4)));
    ContextPtr cx = make_context(Polynomial::variable(1, 0, k));
    CHECK(all_above(cyclic_filtration_dims(Elem(Fraction::inverse_denominator(cx)),
                                           FracSpace{cx, 0}, 4)));
    ContextPtr cxy = make_context(Polynomial::variable(2, 0, k) * Polynomial::variable(2, 1, k)
                                  + Polynomial::of_int(2, 1, k));
    CHECK(all_above(cyclic_filtration_dims(Elem(Fraction::inverse_denominator(cxy)),
                                           FracSpace{cxy, 0}, 4)));
    CHECK(all_above(cyclic_filtration_dims(Elem(QuotientElem::one(2, k)),
                                           QuotSpace{RationalPoint::origin(2, k)}, 4)));
}

TEST_CASE("lower bound checks") {
    Field q = Field::rationals();
    Polynomial one = Polynomial::of_int(2, 1, q);
    DimensionSeries s = cyclic_filtration_dims(Elem(one), PolySpace{2, q}, 4);
    auto checks = check_lower_bound(s, 0);
    REQUIRE(checks.size() == 5);
    for (const auto& c : checks) {
        CHECK(c.pass);
        CHECK(c.bound == integer_binomial(2 + c.level, c.level)); // equality case
    }

    ContextPtr ctx = make_context(Polynomial::variable(1, 0, q));
    DimensionSeries s2 =
        cyclic_filtration_dims(Elem(Fraction::inverse_denominator(ctx)), FracSpace{ctx, 0}, 4);
    for (const auto& c : check_lower_bound(s2, 0)) {
        CHECK(c.pass);
        if (c.level >= 1) {
            CHECK(mpz_class(2 * c.level + 1) > c.bound); // strictly above the bound
        }
    }

    // an artificially flat series fails at level 1
    DimensionSeries flat;
    flat.nvars = 1;
    flat.entries = {{0, 1}, {1, 1}, {2, 1}};
    auto fc = check_lower_bound(flat, 0);
    CHECK(fc[0].pass);
    CHECK_FALSE(fc[1].pass);
    CHECK(fc[1].level == 1);
    CHECK_FALSE(fc[2].pass);
}

TEST_CASE("holonomy constants and length bounds") {
    DimensionSeries degree1; // dims i+1 at n=1
    degree1.nvars = 1;
    for (std::uint32_t i = 0; i <= 5; ++i) degree1.entries.emplace_back(i, i + 1);
    CHECK(holonomy_constant(degree1) == mpq_class(2));
    CHECK(length_bound(holonomy_constant(degree1), 1) == mpq_class(2));

    DimensionSeries mprime; // dims 2i+1 at n=1
    mprime.nvars = 1;
    for (std::uint32_t i = 0; i <= 5; ++i) mprime.entries.emplace_back(i, 2 * i + 1);
    CHECK(holonomy_constant(mprime) == mpq_class(3));
    CHECK(length_bound(holonomy_constant(mprime), 1) == mpq_class(3));

    DimensionSeries flat;
    flat.nvars = 1;
    for (std::uint32_t i = 0; i <= 5; ++i) flat.entries.emplace_back(i, 1);
    CHECK(holonomy_constant(flat) == mpq_class(1));

    CHECK(length_bound(mpq_class(1, 2), 3) == mpq_class(3));
    CHECK_THROWS_AS(length_bound(mpq_class(0), 1), std::invalid_argument);

    DimensionSeries empty;
    empty.nvars = 1;
    empty.entries = {{0, 1}};
    CHECK_THROWS_AS(holonomy_constant(empty), std::invalid_argument);
}

TEST_CASE("localized filtration dimensions match the closed form") {
    Field q = Field::rationals();
    ContextPtr cx = make_context(Polynomial::variable(1, 0, q));
    DimensionSeries s1 = mf_filtration_dims(cx, 3);
    std::vector<std::size_t> dims;
    for (auto& [i, d] : s1.entries) {
        (void)i;
        dims.push_back(d);
    }
    CHECK(dims == std::vector<std::size_t>{1, 3, 5, 7});

    Field f5 = Field::prime_field(5);
    ContextPtr cxy = make_context(Polynomial::variable(2, 0, f5) * Polynomial::variable(2, 1, f5)
                                  + Polynomial::of_int(2, 1, f5));
    DimensionSeries s2 = mf_filtration_dims(cxy, 2);
    dims.clear();
    for (auto& [i, d] : s2.entries) {
        (void)i;
        dims.push_back(d);
    }
    CHECK(dims == std::vector<std::size_t>{1, 10, 28});
    CHECK(s2.entries[0].second == 1); // constants at level 0
}

TEST_CASE("localized constant stays under the degree-filtration constant times (d+1)^n") {
    Field q = Field::rationals();
    for (const Polynomial& f : {
             Polynomial::variable(1, 0, q),
             Polynomial::variable(2, 0, q) * Polynomial::variable(2, 1, q)
                 + Polynomial::of_int(2, 1, q),
         }) {
        ContextPtr ctx = make_context(f);
        std::size_t n = f.vars();
        auto d = static_cast<std::uint32_t>(ctx->denominator_degree());
        DimensionSeries mf = mf_filtration_dims(ctx, 3);
        DimensionSeries base = degree_filtration_dims(n, q, 3 * (d + 1));
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), d + 1, n);
        CHECK(holonomy_constant(mf) <= holonomy_constant(base) * mpq_class(scale));
    }
}

TEST_CASE("multiplicity series") {
    DimensionSeries mprime;
    mprime.nvars = 1;
    for (std::uint32_t i = 0; i <= 4; ++i) mprime.entries.emplace_back(i, 2 * i + 1);
    auto m = multiplicity_series(mprime);
    REQUIRE(m.size() == 4);
    CHECK(m[0] == mpq_class(3));
    CHECK(m[1] == mpq_class(5, 2));
    CHECK(m[2] == mpq_class(7, 3));
    CHECK(m[3] == mpq_class(9, 4));

    DimensionSeries degree1;
    degree1.nvars = 1;
    for (std::uint32_t i = 0; i <= 3; ++i) degree1.entries.emplace_back(i, i + 1);
    auto m2 = multiplicity_series(degree1);
    REQUIRE(m2.size() == 3);
    CHECK(m2[0] == mpq_class(2));
    CHECK(m2[1] == mpq_class(3, 2));
    CHECK(m2[2] == mpq_class(4, 3));

    DimensionSeries flat;
    flat.nvars = 1;
    for (std::uint32_t i = 0; i <= 3; ++i) flat.entries.emplace_back(i, 1);
    auto m3 = multiplicity_series(flat);
    CHECK(m3[0] == mpq_class(1));
    CHECK(m3[1] == mpq_class(1, 2));
    CHECK(m3[2] == mpq_class(1, 3));
}

TEST_CASE("rank engine self-test: random vectors in general position") {
    for (std::uint64_t c : {0ull, 5ull, 13ull}) {
        Field k = Field::of_characteristic(c);
        for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
            Rng rng(seed * 1000 + c);
            // 12 random vectors inside a 50-dimensional coordinate space
            std::vector<Elem> vecs;
            for (int v = 0; v < 12; ++v) {
                Polynomial p(1, k);
                for (std::uint32_t e = 0; e < 50; ++e) {
                    p.add_term(Monomial(std::vector<std::uint32_t>{e}),
                               oracles::random_scalar(k, rng));
                }
                vecs.emplace_back(std::move(p));
            }
            CHECK(span_dim(vecs, PolySpace{1, k}) == 12);
        }
    }
}

TEST_CASE("budget overruns raise the designated error") {
    Field q = Field::rationals();
    Polynomial one = Polynomial::of_int(1, 1, q);
    CHECK_THROWS_AS(cyclic_filtration_dims(Elem(one), PolySpace{1, q}, 1000000),
                    budget_error);
    ContextPtr ctx = make_context(Polynomial::variable(1, 0, q));
    CHECK_THROWS_AS(mf_filtration_dims(ctx, 1000000), budget_error);
    CHECK_THROWS_AS(cyclic_filtration_dims(Elem(Polynomial::zero(1, q)), PolySpace{1, q}, 2),
                    std::invalid_argument);
}

TEST_CASE("reports tie the pieces together") {
    Field q = Field::rationals();
    ContextPtr ctx = make_context(Polynomial::variable(1, 0, q));
    FiltrationReport r = build_report(mf_filtration_dims(ctx, 4), 0);
    CHECK(r.all_bounds_pass());
    CHECK(r.holonomy_c == mpq_class(3));
    CHECK(r.len_bound == mpq_class(3));
    CHECK(r.len_bound == mpq_class(integer_factorial(1)) * r.holonomy_c);
    REQUIRE(r.multiplicity.size() == 4);
    CHECK(r.multiplicity[0] == mpq_class(3));
    CHECK(r.multiplicity[1] == mpq_class(5, 2));
}

} // TEST_SUITE
