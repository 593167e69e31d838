#include "dpd/selftest.hpp"

#include <sstream>

namespace dpd {

Scalar random_scalar(Field k, Rng& rng) {
    if (k.is_rational()) {
        std::int64_t num = rng.int_in(-9, 9);
        std::int64_t den = rng.int_in(1, 4);
        return Scalar::rational(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    }
    std::uint64_t p = k.characteristic();
    return Scalar::of_int(static_cast<std::int64_t>(rng.below(p < 64 ? p : 64)), k);
}

Polynomial random_polynomial(std::size_t nvars, Field k, std::uint32_t maxdeg,
                             std::size_t maxterms, Rng& rng) {
    Polynomial p(nvars, k);
    std::size_t terms = 1 + rng.below(maxterms);
    for (std::size_t j = 0; j < terms; ++j) {
        std::vector<std::uint32_t> e(nvars, 0);
        std::uint32_t budget = maxdeg;
        for (std::size_t i = 0; i < nvars; ++i) {
            e[i] = static_cast<std::uint32_t>(rng.below(budget + 1));
            budget -= e[i];
        }
        p.add_term(Monomial(e), random_scalar(k, rng));
    }
    return p;
}

DiffOp random_operator(std::size_t nvars, Field k, std::uint32_t maxdeg,
                       std::size_t maxterms, Rng& rng) {
    DiffOp a(nvars, k);
    std::size_t terms = 1 + rng.below(maxterms);
    for (std::size_t j = 0; j < terms; ++j) {
        std::vector<std::uint32_t> xe(nvars, 0), de(nvars, 0);
        std::uint32_t budget = maxdeg;
        for (std::size_t i = 0; i < nvars; ++i) {
            xe[i] = static_cast<std::uint32_t>(rng.below(budget + 1));
            budget -= xe[i];
        }
        for (std::size_t i = 0; i < nvars; ++i) {
            de[i] = static_cast<std::uint32_t>(rng.below(budget + 1));
            budget -= de[i];
        }
        a.add_term(OpMonomial(xe, de), random_scalar(k, rng));
    }
    return a;
}

Fraction random_fraction(const ContextPtr& ctx, std::uint32_t maxdeg, std::uint32_t maxexp, Rng& rng) {
    Polynomial num = random_polynomial(ctx->vars(), ctx->field(), maxdeg, 4, rng);
    return Fraction(std::move(num), static_cast<std::uint32_t>(rng.below(maxexp + 1)), ctx);
}

QuotientElem random_quotient_elem(std::size_t nvars, Field k, std::uint32_t maxexp,
                                  std::size_t maxterms, Rng& rng) {
    QuotientElem z(nvars, k);
    std::size_t terms = 1 + rng.below(maxterms);
    for (std::size_t j = 0; j < terms; ++j) {
        std::vector<std::uint32_t> e(nvars);
        for (std::size_t i = 0; i < nvars; ++i) {
            e[i] = static_cast<std::uint32_t>(rng.below(maxexp + 1));
        }
        z.add_term(e, random_scalar(k, rng));
    }
    return z;
}

bool SuiteResult::passed() const {
    for (const auto& c : checks) {
        if (!c.passed()) return false;
    }
    return true;
}

std::string SuiteResult::summary() const {
    std::ostringstream out;
    for (const auto& c : checks) {
        if (c.passed()) {
            out << "ok   " << suite << "." << c.name << " (" << c.cases << " cases)\n";
        } else {
            out << "FAIL " << suite << "." << c.name << " (" << c.failures << "/" << c.cases
                << " cases)";
            if (!c.detail.empty()) out << ": " << c.detail;
            out << "\n";
        }
    }
    out << (passed() ? "suite passed" : "suite FAILED") << ": " << suite << "\n";
    return out.str();
}

namespace {

std::size_t clamped_vars(const VerifyConfig& c, std::size_t cap) {
    return std::max<std::size_t>(1, std::min(c.nvars, cap));
}

Polynomial default_denominator(std::size_t nvars, Field k) {
    if (nvars == 1) return Polynomial::variable(1, 0, k);
    // x1*x2 + 1 padded with the remaining variables untouched
    return Polynomial::variable(nvars, 0, k) * Polynomial::variable(nvars, 1, k)
         + Polynomial::of_int(nvars, 1, k);
}

class Checker {
  public:
    explicit Checker(std::string name) : result_{std::move(name), 0, 0, ""} {}

    void count(bool ok, const std::string& detail_on_failure) {
        ++result_.cases;
        if (!ok) {
            ++result_.failures;
            if (result_.detail.empty()) result_.detail = detail_on_failure;
        }
    }

    CheckResult done() const { return result_; }

  private:
    CheckResult result_;
};

} // namespace

SuiteResult run_relations_suite(const VerifyConfig& config) {
    const std::size_t n = clamped_vars(config, 3);
    Field k = config.field;
    Rng rng(config.seed);
    SuiteResult out{"relations", {}};

    {
        Checker c("homomorphism");
        for (int it = 0; it < 100; ++it) {
            DiffOp a = random_operator(n, k, 4, 3, rng);
            DiffOp b = random_operator(n, k, 4, 3, rng);
            Polynomial g = random_polynomial(n, k, 5, 4, rng);
            c.count((a * b).apply(g) == a.apply(b.apply(g)), "composition disagreed on case "
                    + std::to_string(it));
        }
        out.checks.push_back(c.done());
    }
    {
        Checker c("associativity");
        for (int it = 0; it < 50; ++it) {
            DiffOp a = random_operator(n, k, 3, 3, rng);
            DiffOp b = random_operator(n, k, 3, 3, rng);
            DiffOp d = random_operator(n, k, 3, 3, rng);
            c.count((a * b) * d == a * (b * d), "case " + std::to_string(it));
        }
        out.checks.push_back(c.done());
    }
    {
        Checker c("degree_submultiplicative");
        for (int it = 0; it < 100; ++it) {
            DiffOp a = random_operator(n, k, 4, 3, rng);
            DiffOp b = random_operator(n, k, 4, 3, rng);
            DiffOp p = a * b;
            bool ok = p.is_zero() || p.bernstein_degree() <= a.bernstein_degree() + b.bernstein_degree();
            c.count(ok, "case " + std::to_string(it));
        }
        out.checks.push_back(c.done());
    }
    {
        Checker c("product_formula");
        for (int it = 0; it < 50; ++it) {
            std::size_t var = rng.below(n);
            std::uint32_t t = static_cast<std::uint32_t>(rng.below(6));
            Polynomial f = random_polynomial(n, k, 4, 4, rng);
            DiffOp lhs = DiffOp::derivative_generator(n, var, t, k) * DiffOp::of_polynomial(f);
            DiffOp rhs(n, k);
            for (std::uint32_t s = 0; s <= t; ++s) {
                rhs += DiffOp::of_polynomial(divided_derivative(f, s, var))
                     * DiffOp::derivative_generator(n, var, t - s, k);
            }
            c.count(lhs == rhs, "case " + std::to_string(it));
        }
        out.checks.push_back(c.done());
    }
    {
        Checker c("right_normal_form_roundtrip");
        for (int it = 0; it < 50; ++it) {
            DiffOp a = random_operator(n, k, 4, 4, rng);
            c.count(expand_right_normal_form(right_normal_form(a), n, k) == a,
                    "case " + std::to_string(it));
        }
        out.checks.push_back(c.done());
    }
    {
        Checker c("basis_cardinality");
        for (std::uint32_t s = 0; s <= 6; ++s) {
            if (n == 3 && s > 5) continue;
            mpz_class expect = integer_binomial(2 * n + s, 2 * n);
            c.count(mpz_class(static_cast<unsigned long>(filtration_basis(s, n).size())) == expect,
                    "level " + std::to_string(s));
        }
        out.checks.push_back(c.done());
    }
    return out;
}

SuiteResult run_localization_suite(const VerifyConfig& config) {
    const std::size_t n = clamped_vars(config, 3);
    Field k = config.field;
    Polynomial f = config.f.value_or(default_denominator(n, k));
    ContextPtr ctx = make_context(f);
    Rng rng(config.seed);
    SuiteResult out{"localization", {}};

    {
        Checker c("product_rule");
        for (int it = 0; it < 50; ++it) {
            std::size_t var = rng.below(n);
            std::uint32_t t = 1 + static_cast<std::uint32_t>(rng.below(4));
            Polynomial g = random_polynomial(n, k, 3, 3, rng);
            Fraction u = random_fraction(ctx, 4, 2, rng);
            Fraction lhs = divided_derivative(u.scaled(g), t, var);
            Fraction rhs = Fraction::zero(ctx);
            for (std::uint32_t s = 0; s <= t; ++s) {
                rhs = rhs + divided_derivative(u, t - s, var).scaled(divided_derivative(g, s, var));
            }
            c.count(lhs.semantically_equal(rhs), "case " + std::to_string(it));
        }
        out.checks.push_back(c.done());
    }
    {
        Checker c("clearing_identity");
        for (int it = 0; it < 50; ++it) {
            std::size_t var = rng.below(n);
            std::uint32_t t = 1 + static_cast<std::uint32_t>(rng.below(4));
            std::uint32_t j = static_cast<std::uint32_t>(rng.below(3));
            Polynomial m = random_polynomial(n, k, 3, 3, rng);
            Fraction u(m * ctx->denominator_power(j), j, ctx);
            c.count(divided_derivative(u, t, var)
                        .semantically_equal(Fraction::of_polynomial(divided_derivative(m, t, var), ctx)),
                    "case " + std::to_string(it));
        }
        out.checks.push_back(c.done());
    }
    {
        Checker c("contraction_and_commutation");
        for (int it = 0; it < 50; ++it) {
            Fraction u = random_fraction(ctx, 3, 2, rng);
            std::uint32_t t = static_cast<std::uint32_t>(rng.below(4));
            std::uint32_t s = static_cast<std::uint32_t>(rng.below(4));
            std::size_t var = rng.below(n);
            Fraction lhs = divided_derivative(divided_derivative(u, t, var), s, var);
            Fraction rhs = divided_derivative(u, s + t, var).scaled(binomial_in(s + t, s, k));
            bool ok = lhs.semantically_equal(rhs);
            if (n >= 2) {
                Fraction ab = divided_derivative(divided_derivative(u, t, 0), s, 1);
                Fraction ba = divided_derivative(divided_derivative(u, s, 1), t, 0);
                ok = ok && ab.semantically_equal(ba);
            }
            c.count(ok, "case " + std::to_string(it));
        }
        out.checks.push_back(c.done());
    }
    {
        Checker c("denominator_power_divisibility");
        std::int64_t d = ctx->denominator_degree();
        for (std::uint32_t j = 1; j <= 4; ++j) {
            for (std::uint32_t s = 1; s <= j; ++s) {
                for (std::size_t var = 0; var < n; ++var) {
                    Polynomial ds = divided_derivative(ctx->denominator_power(j), s, var);
                    auto fs = divide_exact(ds, ctx->denominator_power(j - s));
                    bool ok = fs.has_value();
                    if (ok && !fs->is_zero()) {
                        ok = fs->degree() <= d * static_cast<std::int64_t>(s)
                                             - static_cast<std::int64_t>(s);
                    }
                    c.count(ok, "j=" + std::to_string(j) + " s=" + std::to_string(s));
                }
            }
        }
        out.checks.push_back(c.done());
    }
    {
        Checker c("filtration_containments");
        const std::int64_t d1 = ctx->denominator_degree() + 1;
        for (int it = 0; it < 40; ++it) {
            std::uint32_t j = static_cast<std::uint32_t>(rng.below(3));
            Polynomial m = random_polynomial(n, k, static_cast<std::uint32_t>(j * d1), 4, rng);
            Fraction u(m, j, ctx);
            bool ok = in_filtration_level(u, j);
            for (std::size_t var = 0; var < n && ok; ++var) {
                ok = in_filtration_level(u.scaled(Polynomial::variable(n, var, k)), j + 1);
                std::uint32_t t = 1 + static_cast<std::uint32_t>(rng.below(3));
                ok = ok && in_filtration_level(divided_derivative(u, t, var), j + t);
            }
            c.count(ok, "case " + std::to_string(it));
        }
        out.checks.push_back(c.done());
    }
    {
        Checker c("filtration_exhaustion");
        for (int it = 0; it < 40; ++it) {
            Fraction u = random_fraction(ctx, 4, 3, rng);
            if (u.is_zero()) {
                c.count(in_filtration_level(u, 0), "zero fraction");
                continue;
            }
            std::int64_t overshoot = u.numerator().degree()
                - static_cast<std::int64_t>(u.exponent()) * (ctx->denominator_degree() + 1);
            std::uint32_t level = u.exponent()
                + static_cast<std::uint32_t>(std::max<std::int64_t>(0, overshoot));
            c.count(in_filtration_level(u, level), "case " + std::to_string(it));
        }
        out.checks.push_back(c.done());
    }
    return out;
}

SuiteResult run_quotient_suite(const VerifyConfig& config) {
    const std::size_t n = clamped_vars(config, 2);
    Field k = config.field;
    RationalPoint origin = RationalPoint::origin(n, k);
    Rng rng(config.seed);
    SuiteResult out{"quotient", {}};

    {
        Checker c("basis_annihilation");
        for (int it = 0; it < 20; ++it) {
            std::vector<std::uint32_t> t(n);
            for (std::size_t i = 0; i < n; ++i) t[i] = static_cast<std::uint32_t>(rng.below(5));
            QuotientElem z = QuotientElem::basis(t, k);
            bool ok = true;
            for (std::size_t i = 0; i < n && ok; ++i) {
                DiffOp xpow = DiffOp::of_polynomial(Polynomial::variable(n, i, k).pow(t[i] + 1));
                ok = left_act(xpow, z, origin).is_zero();
            }
            c.count(ok, "case " + std::to_string(it));
        }
        out.checks.push_back(c.done());
    }
    {
        Checker c("reduction_table");
        for (std::uint32_t w = 0; w <= 5; ++w) {
            for (std::uint32_t t = 0; t <= 5; ++t) {
                std::vector<std::uint32_t> xe(n, 0), de(n, 0);
                xe[0] = w;
                de[0] = t;
                QuotientElem z = reduce_mod_point_ideal(
                    DiffOp::monomial(OpMonomial(xe, de), Scalar::one(k)), origin);
                bool ok = true;
                if (w > t) {
                    ok = z.is_zero();
                } else if (w == t) {
                    Scalar sign = Scalar::of_int(t % 2 == 0 ? 1 : -1, k);
                    ok = z == QuotientElem::one(n, k).scaled(sign);
                }
                c.count(ok, "w=" + std::to_string(w) + " t=" + std::to_string(t));
            }
        }
        out.checks.push_back(c.done());
    }
    {
        Checker c("socle_multiplier");
        for (int it = 0; it < 60; ++it) {
            QuotientElem z = random_quotient_elem(n, k, 4, 4, rng);
            if (z.is_zero()) continue;
            bool ok = true;
            try {
                auto m = socle_multiplier(z); // verifies internally via left_act
                ok = !m.value.is_zero();
            } catch (const std::logic_error&) {
                ok = false;
            }
            c.count(ok, "case " + std::to_string(it));
        }
        out.checks.push_back(c.done());
    }
    {
        Checker c("translation_invariance");
        for (int it = 0; it < 25; ++it) {
            DiffOp a = random_operator(n, k, 3, 3, rng);
            std::vector<Scalar> coords;
            for (std::size_t i = 0; i < n; ++i) coords.push_back(random_scalar(k, rng));
            RationalPoint pt(coords);
            c.count(reduce_mod_point_ideal(a, pt)
                        == reduce_mod_point_ideal(a.shifted(coords), origin),
                    "case " + std::to_string(it));
        }
        out.checks.push_back(c.done());
    }
    {
        // derivative images of 1/x1 stay independent: ranks 0..8 are full
        Checker c("derivative_images_independence");
        ContextPtr ctx = make_context(Polynomial::variable(1, 0, k));
        Fraction invx = Fraction::inverse_denominator(ctx);
        std::vector<Elem> vecs;
        for (std::uint32_t t = 0; t <= 8; ++t) {
            vecs.emplace_back(divided_derivative(invx, t, 0));
        }
        c.count(span_dim(vecs, FracSpace{ctx, 9}) == 9, "rank deficient");
        out.checks.push_back(c.done());
    }
    return out;
}

SuiteResult run_bounds_suite(const VerifyConfig& config) {
    const std::size_t n = clamped_vars(config, 2);
    Field k = config.field;
    Polynomial f = config.f.value_or(default_denominator(n, k));
    ContextPtr ctx = make_context(f);
    const std::uint32_t i_max = std::min<std::uint32_t>(config.i_max, 6);
    Rng rng(config.seed);
    SuiteResult out{"bounds", {}};

    auto all_pass = [](const std::vector<LevelCheck>& checks, std::string& fail_detail) {
        for (const auto& c : checks) {
            if (!c.pass) {
                fail_detail = "lower bound fails at level " + std::to_string(c.level);
                return false;
            }
        }
        return true;
    };

    {
        Checker c("growth_bound_polynomials");
        DimensionSeries s =
            cyclic_filtration_dims(Elem(Polynomial::of_int(n, 1, k)), PolySpace{n, k}, i_max);
        std::string detail;
        bool ok = all_pass(check_lower_bound(s, 0), detail);
        c.count(ok, detail);
        out.checks.push_back(c.done());
    }
    {
        Checker c("growth_bound_localization");
        DimensionSeries s = cyclic_filtration_dims(Elem(Fraction::inverse_denominator(ctx)),
                                                   FracSpace{ctx, 0}, i_max);
        std::string detail;
        bool ok = all_pass(check_lower_bound(s, 0), detail);
        c.count(ok, detail);
        out.checks.push_back(c.done());
    }
    {
        Checker c("growth_bound_quotient");
        DimensionSeries s = cyclic_filtration_dims(Elem(QuotientElem::one(n, k)),
                                                   QuotSpace{RationalPoint::origin(n, k)}, i_max);
        std::string detail;
        bool ok = all_pass(check_lower_bound(s, 0), detail);
        c.count(ok, detail);
        out.checks.push_back(c.done());
    }
    {
        Checker c("localized_filtration_agreement");
        bool ok = true;
        std::string detail;
        try {
            DimensionSeries s = mf_filtration_dims(ctx, std::min<std::uint32_t>(i_max, 3));
            for (std::size_t i = 1; i < s.entries.size(); ++i) {
                if (s.entries[i].second < s.entries[i - 1].second) {
                    ok = false;
                    detail = "series not monotone";
                }
            }
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
        c.count(ok, detail);
        out.checks.push_back(c.done());
    }
    {
        Checker c("localized_constant_comparison");
        std::uint32_t levels = std::min<std::uint32_t>(i_max, 3);
        auto d = static_cast<std::uint32_t>(ctx->denominator_degree());
        DimensionSeries mf = mf_filtration_dims(ctx, levels);
        DimensionSeries base = degree_filtration_dims(n, k, levels * (d + 1));
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), d + 1, n);
        c.count(holonomy_constant(mf) <= holonomy_constant(base) * mpq_class(scale),
                "constant exceeds the localized budget");
        out.checks.push_back(c.done());
    }
    {
        Checker c("rank_self_test");
        for (std::uint64_t shift = 0; shift < 3; ++shift) {
            Rng r2(config.seed + shift);
            std::vector<Elem> vecs;
            for (int v = 0; v < 10; ++v) {
                Polynomial p(1, k);
                for (std::uint32_t e = 0; e < 40; ++e) {
                    p.add_term(Monomial(std::vector<std::uint32_t>{e}), random_scalar(k, r2));
                }
                vecs.emplace_back(std::move(p));
            }
            c.count(span_dim(vecs, PolySpace{1, k}) == 10, "rank deficient");
        }
        out.checks.push_back(c.done());
    }
    if (config.corrupt_level.has_value()) {
        // negative control: damage the polynomial-ring series at the given
        // level and demand the check flags exactly that level
        Checker c("corrupted_series_control");
        DimensionSeries s = degree_filtration_dims(n, k, i_max);
        bool found = false;
        for (auto& [i, dim] : s.entries) {
            if (i == *config.corrupt_level) {
                dim = 0;
                found = true;
            }
        }
        if (!found) {
            c.count(false, "corrupt level " + std::to_string(*config.corrupt_level)
                               + " outside the series");
        } else {
            std::string detail;
            bool flagged = !all_pass(check_lower_bound(s, 0), detail);
            // the control is expected to FAIL the suite, citing the level
            c.count(false, flagged ? detail + " (injected corruption detected)"
                                   : "injected corruption was not detected");
        }
        out.checks.push_back(c.done());
    }
    return out;
}

} // namespace dpd
