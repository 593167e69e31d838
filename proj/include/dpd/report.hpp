#ifndef DPD_REPORT_HPP
#define DPD_REPORT_HPP

#include <string>

#include <json.hpp>

#include "dpd/filtration.hpp"

namespace dpd {

// CSV table for one filtration report. Fixed header:
//   i,dim,lower_bound,binom_ref,ratio_n_fact_dim_over_i_pow_n
// lower_bound is pass/fail, binom_ref the binomial the level is checked
// against; rationals render exactly as a/b. Unchecked cells stay empty.
std::string report_csv(const FiltrationReport& report);

nlohmann::json report_json(const FiltrationReport& report);

} // namespace dpd

#endif
