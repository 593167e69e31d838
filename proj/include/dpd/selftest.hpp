#ifndef DPD_SELFTEST_HPP
#define DPD_SELFTEST_HPP

#include <optional>
#include <string>
#include <vector>

#include "dpd/filtration.hpp"
#include "dpd/rng.hpp"

namespace dpd {

// Seeded random generators used by the verification suites. Deterministic
// for a fixed seed.
Scalar random_scalar(Field k, Rng& rng);
Polynomial random_polynomial(std::size_t nvars, Field k, std::uint32_t maxdeg,
                             std::size_t maxterms, Rng& rng);
DiffOp random_operator(std::size_t nvars, Field k, std::uint32_t maxdeg,
                       std::size_t maxterms, Rng& rng);
Fraction random_fraction(const ContextPtr& ctx, std::uint32_t maxdeg, std::uint32_t maxexp, Rng& rng);
QuotientElem random_quotient_elem(std::size_t nvars, Field k, std::uint32_t maxexp,
                                  std::size_t maxterms, Rng& rng);

struct CheckResult {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string detail; // first failure, or extra context
    bool passed() const { return failures == 0; }
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;
    bool passed() const;
    std::string summary() const; // one line per check plus a verdict
};

struct VerifyConfig {
    std::size_t nvars = 2;
    Field field = Field::rationals();
    std::optional<Polynomial> f; // denominator; suites pick a default if absent
    std::uint32_t i_max = 4;
    std::uint64_t seed = 1;
    // Test hook: corrupt the computed series at this level so the lower
    // bound check must flag it (negative control for the bounds suite).
    std::optional<std::uint32_t> corrupt_level;
};

// Operator-ring identities: homomorphism into End(R), associativity,
// degree submultiplicativity, the product formula, right-normal-form
// round-trips, basis cardinality.
SuiteResult run_relations_suite(const VerifyConfig& config);

// Localization identities: product rule, clearing, contraction and
// commutation, denominator-power divisibility with degrees, filtration
// containments and exhaustion.
SuiteResult run_localization_suite(const VerifyConfig& config);

// Quotient-module identities: basis annihilation, the reduction table,
// socle multipliers, translation invariance, independence of derivative
// images.
SuiteResult run_quotient_suite(const VerifyConfig& config);

// Dimension bounds: cyclic growth lower bounds for the standard witnesses,
// monotonicity, localized filtration agreement and constant comparison,
// rank engine self-test; honors corrupt_level as a negative control.
SuiteResult run_bounds_suite(const VerifyConfig& config);

} // namespace dpd

#endif
