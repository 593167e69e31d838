#include "dpd/filtration.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "dpd/error.hpp"

namespace dpd {

namespace {

using Coord = std::vector<std::uint32_t>;
using SparseVec = std::map<Coord, Scalar, GrlexLess>;

Field space_field(const Space& ambient) {
    if (const auto* p = std::get_if<PolySpace>(&ambient)) return p->field;
    if (const auto* f = std::get_if<FracSpace>(&ambient)) return f->ctx->field();
    return std::get<QuotSpace>(ambient).point.field();
}

std::size_t space_vars(const Space& ambient) {
    if (const auto* p = std::get_if<PolySpace>(&ambient)) return p->nvars;
    if (const auto* f = std::get_if<FracSpace>(&ambient)) return f->ctx->vars();
    return std::get<QuotSpace>(ambient).point.vars();
}

SparseVec poly_coords(const Polynomial& g) {
    SparseVec v;
    for (const auto& [m, c] : g.terms()) v.emplace(m.exps(), c);
    return v;
}

SparseVec coordinates(const Elem& e, const Space& ambient) {
    if (const auto* p = std::get_if<Polynomial>(&e)) {
        const auto* sp = std::get_if<PolySpace>(&ambient);
        if (!sp) throw std::invalid_argument("polynomial in a non-polynomial ambient");
        if (p->vars() != sp->nvars || p->field() != sp->field) {
            throw std::invalid_argument("element/ambient mismatch");
        }
        return poly_coords(*p);
    }
    if (const auto* u = std::get_if<Fraction>(&e)) {
        const auto* sf = std::get_if<FracSpace>(&ambient);
        if (!sf) throw std::invalid_argument("fraction in a non-fraction ambient");
        if (!(*u->context() == *sf->ctx)) throw std::invalid_argument("fraction context mismatch");
        const auto& ctx = *sf->ctx;
        if (u->exponent() <= sf->level) {
            return poly_coords(u->numerator() * ctx.denominator_power(sf->level - u->exponent()));
        }
        auto m = divide_exact(u->numerator(), ctx.denominator_power(u->exponent() - sf->level));
        if (!m.has_value()) {
            throw std::invalid_argument("fraction does not fit the ambient level");
        }
        return poly_coords(*m);
    }
    const auto& z = std::get<QuotientElem>(e);
    const auto* sq = std::get_if<QuotSpace>(&ambient);
    if (!sq) throw std::invalid_argument("quotient element in a non-quotient ambient");
    if (z.vars() != sq->point.vars() || z.field() != sq->point.field()) {
        throw std::invalid_argument("element/ambient mismatch");
    }
    SparseVec v;
    for (const auto& [dexp, c] : z.terms()) v.emplace(dexp, c);
    return v;
}

// Exact rank of integer rows by one-step Bareiss elimination with row
// pivoting; every interior division is checked to be exact.
std::size_t rank_integer(std::vector<std::vector<mpz_class>>& m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m.front().size();
    mpz_class prev = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[rank], m[piv]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                mpz_class num = m[rank][col] * m[i][j] - m[i][col] * m[rank][j];
                mpz_class q, r;
                mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                if (r != 0) throw std::logic_error("fraction-free elimination lost exactness");
                m[i][j] = q;
            }
            m[i][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return rank;
}

std::size_t rank_mod_p(std::vector<std::vector<std::uint64_t>>& m, std::uint64_t p) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m.front().size();
    auto mulmod = [p](std::uint64_t a, std::uint64_t b) {
        return static_cast<std::uint64_t>((static_cast<__uint128_t>(a) * b) % p);
    };
    auto submod = [p](std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + (p - b); };
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[rank], m[piv]);
        const std::uint64_t lead = m[rank][col];
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (m[i][col] == 0) continue;
            // row_i := lead * row_i - m[i][col] * row_rank
            const std::uint64_t f = m[i][col];
            for (std::size_t j = col; j < cols; ++j) {
                m[i][j] = submod(mulmod(lead, m[i][j]), mulmod(f, m[rank][j]));
            }
        }
        ++rank;
    }
    return rank;
}

std::size_t rank_of(const std::vector<SparseVec>& vecs, Field k) {
    std::map<Coord, std::size_t, GrlexLess> columns;
    for (const auto& v : vecs) {
        for (const auto& [coord, c] : v) {
            (void)c;
            columns.emplace(coord, columns.size());
        }
    }
    if (vecs.size() > kMaxSpanVectors || columns.size() > kMaxSpanColumns
        || vecs.size() * columns.size() > kMaxSpanCells) {
        throw budget_error("rank request exceeds the span budget ("
                           + std::to_string(vecs.size()) + " vectors, "
                           + std::to_string(columns.size()) + " coordinates)");
    }
    // re-index columns in grlex order for determinism
    std::size_t idx = 0;
    for (auto& [coord, i] : columns) {
        (void)coord;
        i = idx++;
    }
    if (columns.empty()) return 0;

    if (k.is_rational()) {
        std::vector<std::vector<mpz_class>> m;
        m.reserve(vecs.size());
        for (const auto& v : vecs) {
            if (v.empty()) continue;
            mpz_class lcm = 1;
            for (const auto& [coord, c] : v) {
                (void)coord;
                mpz_class den = c.rat().get_den();
                mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
            }
            std::vector<mpz_class> row(columns.size(), 0);
            for (const auto& [coord, c] : v) {
                mpq_class scaled = c.rat() * lcm;
                row[columns.at(coord)] = scaled.get_num(); // denominator is 1 now
            }
            m.push_back(std::move(row));
        }
        return rank_integer(m);
    }
    std::vector<std::vector<std::uint64_t>> m;
    m.reserve(vecs.size());
    for (const auto& v : vecs) {
        if (v.empty()) continue;
        std::vector<std::uint64_t> row(columns.size(), 0);
        for (const auto& [coord, c] : v) row[columns.at(coord)] = c.residue();
        m.push_back(std::move(row));
    }
    return rank_mod_p(m, k.characteristic());
}

Elem apply_basis_op(const OpMonomial& op, const Elem& z, const Space& ambient) {
    Field k = space_field(ambient);
    if (const auto* p = std::get_if<Polynomial>(&z)) {
        return DiffOp::monomial(op, Scalar::one(k)).apply(*p);
    }
    if (const auto* u = std::get_if<Fraction>(&z)) {
        return apply(DiffOp::monomial(op, Scalar::one(k)), *u);
    }
    const auto& q = std::get<QuotientElem>(z);
    const auto& pt = std::get<QuotSpace>(ambient).point;
    return left_act(DiffOp::monomial(op, Scalar::one(k)), q, pt);
}

bool elem_is_zero(const Elem& e) {
    if (const auto* p = std::get_if<Polynomial>(&e)) return p->is_zero();
    if (const auto* u = std::get_if<Fraction>(&e)) return u->is_zero();
    return std::get<QuotientElem>(e).is_zero();
}

void require_nondecreasing(const DimensionSeries& s) {
    for (std::size_t i = 1; i < s.entries.size(); ++i) {
        if (s.entries[i].second < s.entries[i - 1].second) {
            throw std::logic_error("dimension series decreased between levels");
        }
    }
}

} // namespace

std::size_t span_dim(const std::vector<Elem>& vectors, const Space& ambient) {
    std::vector<SparseVec> vecs;
    vecs.reserve(vectors.size());
    for (const auto& e : vectors) vecs.push_back(coordinates(e, ambient));
    return rank_of(vecs, space_field(ambient));
}

DimensionSeries cyclic_filtration_dims(const Elem& z, const Space& ambient, std::uint32_t i_max) {
    if (elem_is_zero(z)) throw std::invalid_argument("cyclic filtration of the zero element");
    const std::size_t n = space_vars(ambient);
    Field k = space_field(ambient);

    mpz_class opcount = integer_binomial(2 * n + i_max, 2 * n);
    if (opcount > static_cast<unsigned long>(kMaxSpanVectors)) {
        throw budget_error("filtration basis of level " + std::to_string(i_max) + " has "
                           + opcount.get_str() + " operators, over the budget of "
                           + std::to_string(kMaxSpanVectors));
    }

    // apply each basis operator once; levels reuse lower-level images
    std::vector<OpMonomial> ops = filtration_basis(i_max, n);
    std::vector<std::pair<std::uint64_t, SparseVec>> images;
    images.reserve(ops.size());
    const auto* fs = std::get_if<FracSpace>(&ambient);
    for (const auto& op : ops) {
        Elem img = apply_basis_op(op, z, ambient);
        Space embed = ambient;
        if (fs) {
            // common denominator high enough for every image of this level
            std::uint32_t base = std::get<Fraction>(z).exponent();
            embed = FracSpace{fs->ctx, base + i_max};
        }
        images.emplace_back(op.bernstein_degree(), coordinates(img, embed));
    }

    DimensionSeries series;
    series.nvars = n;
    series.field_desc = k.str();
    for (std::uint32_t i = 0; i <= i_max; ++i) {
        std::vector<SparseVec> level;
        for (const auto& [deg, coords] : images) {
            if (deg <= i) level.push_back(coords);
        }
        series.entries.emplace_back(i, rank_of(level, k));
    }
    require_nondecreasing(series);
    return series;
}

std::vector<LevelCheck> check_lower_bound(const DimensionSeries& series, std::uint32_t offset) {
    std::vector<LevelCheck> out;
    for (const auto& [i, dim] : series.entries) {
        if (i < offset) continue;
        mpz_class bound = integer_binomial(series.nvars + i - offset, i - offset);
        bool pass = bound <= static_cast<unsigned long>(dim);
        out.push_back(LevelCheck{i, std::move(bound), pass});
    }
    return out;
}

mpq_class holonomy_constant(const DimensionSeries& series) {
    mpq_class best = 0;
    bool seen = false;
    for (const auto& [i, dim] : series.entries) {
        if (i < 1) continue;
        mpz_class denom;
        mpz_ui_pow_ui(denom.get_mpz_t(), i, series.nvars);
        mpq_class ratio(mpz_class(static_cast<unsigned long>(dim)), denom);
        ratio.canonicalize();
        if (!seen || ratio > best) best = ratio;
        seen = true;
    }
    if (!seen) throw std::invalid_argument("series has no entries at level >= 1");
    return best;
}

mpq_class length_bound(const mpq_class& c, std::size_t nvars) {
    if (c <= 0) throw std::invalid_argument("holonomy constant must be positive");
    return mpq_class(integer_factorial(nvars)) * c;
}

DimensionSeries mf_filtration_dims(const ContextPtr& ctx, std::uint32_t i_max) {
    const std::size_t n = ctx->vars();
    const std::uint64_t d1 = static_cast<std::uint64_t>(ctx->denominator_degree()) + 1;

    // the top level is the largest; reject the whole request up front
    mpz_class top = integer_binomial(n + static_cast<std::uint64_t>(i_max) * d1, n);
    if (top > static_cast<unsigned long>(kMaxSpanVectors)) {
        throw budget_error("localized filtration level " + std::to_string(i_max) + " spans "
                           + top.get_str() + " monomials, over the budget of "
                           + std::to_string(kMaxSpanVectors));
    }

    DimensionSeries series;
    series.nvars = n;
    series.field_desc = ctx->field().str();
    series.module_desc = "localization at f = " + ctx->denominator().str();
    series.generator_desc = "degree-filtration levels m/f^i, deg m <= i(d+1)";
    for (std::uint32_t i = 0; i <= i_max; ++i) {
        mpz_class closed = integer_binomial(n + i * d1, n);
        // spanning set: all monomials of degree <= i(d+1), placed over f^i
        std::vector<Elem> span;
        std::vector<std::uint32_t> cur;
        std::vector<std::vector<std::uint32_t>> monomials;
        {
            // enumerate exponent tuples with sum <= i(d+1)
            std::function<void(std::uint32_t, std::size_t)> rec = [&](std::uint32_t budget,
                                                                      std::size_t slot) {
                if (slot == n) {
                    monomials.push_back(cur);
                    return;
                }
                for (std::uint32_t v = 0; v <= budget; ++v) {
                    cur.push_back(v);
                    rec(budget - v, slot + 1);
                    cur.pop_back();
                }
            };
            rec(static_cast<std::uint32_t>(i * d1), 0);
        }
        for (auto& e : monomials) {
            span.emplace_back(Fraction(
                Polynomial::monomial(Monomial(std::move(e)), Scalar::one(ctx->field())), i, ctx));
        }
        std::size_t rank = span_dim(span, FracSpace{ctx, i});
        if (mpz_class(static_cast<unsigned long>(rank)) != closed) {
            throw std::logic_error("localized filtration dimensions disagree with the closed form");
        }
        series.entries.emplace_back(i, rank);
    }
    require_nondecreasing(series);
    return series;
}

DimensionSeries degree_filtration_dims(std::size_t nvars, Field k, std::uint32_t i_max) {
    if (integer_binomial(nvars + i_max, nvars) > static_cast<unsigned long>(kMaxSpanVectors)) {
        throw budget_error("degree filtration level " + std::to_string(i_max)
                           + " is over the span budget");
    }
    DimensionSeries series;
    series.nvars = nvars;
    series.field_desc = k.str();
    series.module_desc = "polynomial ring, filtration by total degree";
    series.generator_desc = "1";
    for (std::uint32_t i = 0; i <= i_max; ++i) {
        series.entries.emplace_back(i, integer_binomial(nvars + i, nvars).get_ui());
    }
    return series;
}

std::vector<mpq_class> multiplicity_series(const DimensionSeries& series) {
    std::vector<mpq_class> out;
    mpz_class nfact = integer_factorial(series.nvars);
    for (const auto& [i, dim] : series.entries) {
        if (i < 1) continue;
        mpz_class denom;
        mpz_ui_pow_ui(denom.get_mpz_t(), i, series.nvars);
        mpq_class ratio(nfact * static_cast<unsigned long>(dim), denom);
        ratio.canonicalize();
        out.push_back(std::move(ratio));
    }
    return out;
}

bool FiltrationReport::all_bounds_pass() const {
    for (const auto& c : lower_bound) {
        if (!c.pass) return false;
    }
    return true;
}

FiltrationReport build_report(DimensionSeries series, std::uint32_t offset) {
    FiltrationReport r;
    r.lower_bound = check_lower_bound(series, offset);
    r.offset = offset;
    r.holonomy_c = holonomy_constant(series);
    r.len_bound = length_bound(r.holonomy_c, series.nvars);
    r.multiplicity = multiplicity_series(series);
    r.series = std::move(series);
    return r;
}

} // namespace dpd
