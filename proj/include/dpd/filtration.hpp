#ifndef DPD_FILTRATION_HPP
#define DPD_FILTRATION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "dpd/localize.hpp"
#include "dpd/quotient.hpp"

namespace dpd {

// Hard limits for rank/enumeration requests. Exceeding them raises
// budget_error rather than producing truncated output.
inline constexpr std::size_t kMaxSpanVectors = 2000;
inline constexpr std::size_t kMaxSpanColumns = 50000;
inline constexpr std::size_t kMaxSpanCells = 2000000; // vectors * coordinates

// Coordinatized ambient k-vector spaces. Every supported element embeds
// injectively as a finitely supported coordinate vector:
//   - polynomials: coordinates indexed by monomials;
//   - fractions: the numerator of the representative with exponent `level`
//     (elements must fit that level, checked);
//   - quotient elements: coordinates indexed by D-exponent tuples.
struct PolySpace {
    std::size_t nvars;
    Field field;
};
struct FracSpace {
    ContextPtr ctx;
    std::uint32_t level;
};
struct QuotSpace {
    RationalPoint point;
};
using Space = std::variant<PolySpace, FracSpace, QuotSpace>;

using Elem = std::variant<Polynomial, Fraction, QuotientElem>;

// Exact dimension of the k-span. Over QQ: fraction-free (Bareiss) Gaussian
// elimination on integer-cleared rows; over GF(p): plain elimination mod p.
std::size_t span_dim(const std::vector<Elem>& vectors, const Space& ambient);

struct DimensionSeries {
    std::size_t nvars = 0;
    std::vector<std::pair<std::uint32_t, std::size_t>> entries; // (level, dim), ascending
    std::string field_desc;
    std::string module_desc;
    std::string generator_desc;
};

// dim of the span of { A z : A in the operator filtration basis of level i }
// for i = 0..i_max. The action is operator application / the divided-power
// action / left multiplication, depending on the ambient.
DimensionSeries cyclic_filtration_dims(const Elem& z, const Space& ambient, std::uint32_t i_max);

struct LevelCheck {
    std::uint32_t level;
    mpz_class bound;
    bool pass;
};

// Flags each level i >= offset where dim_i < C(n + i - offset, i - offset).
std::vector<LevelCheck> check_lower_bound(const DimensionSeries& series, std::uint32_t offset);

// Smallest constant compatible with the observed levels i >= 1, i.e.
// max_i dim_i / i^n as an exact rational. A lower estimate of any global
// constant; callers must not read more into it.
mpq_class holonomy_constant(const DimensionSeries& series);

// n! * C exactly.
mpq_class length_bound(const mpq_class& c, std::size_t nvars);

// The filtration on R_f induced by the degree filtration on R: level i holds
// the fractions m/f^i with deg m <= i*(deg f + 1). Dimensions computed both
// by closed form C(n + i(d+1), n) and by rank of the spanning monomials;
// disagreement is a library bug.
DimensionSeries mf_filtration_dims(const ContextPtr& ctx, std::uint32_t i_max);

// Degree filtration on R itself: dim of level i is C(n + i, n).
DimensionSeries degree_filtration_dims(std::size_t nvars, Field k, std::uint32_t i_max);

// n! * dim_i / i^n for i >= 1, exact rationals; reported for inspection of
// the limiting behavior, with no convergence claim attached.
std::vector<mpq_class> multiplicity_series(const DimensionSeries& series);

struct FiltrationReport {
    DimensionSeries series;
    std::optional<std::uint32_t> offset; // absent means 0 was used
    std::vector<LevelCheck> lower_bound;
    mpq_class holonomy_c;      // observed-range estimate
    mpq_class len_bound;       // n! * holonomy_c exactly
    std::vector<mpq_class> multiplicity;

    bool all_bounds_pass() const;
};

FiltrationReport build_report(DimensionSeries series, std::uint32_t offset);

} // namespace dpd

#endif
