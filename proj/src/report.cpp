#include "dpd/report.hpp"

#include <map>
#include <sstream>

namespace dpd {

std::string report_csv(const FiltrationReport& report) {
    std::map<std::uint32_t, const LevelCheck*> checks;
    for (const auto& c : report.lower_bound) checks.emplace(c.level, &c);

    // multiplicity entries align with the levels >= 1, in order
    std::map<std::uint32_t, const mpq_class*> ratios;
    {
        std::size_t at = 0;
        for (const auto& [i, dim] : report.series.entries) {
            (void)dim;
            if (i < 1 || at >= report.multiplicity.size()) continue;
            ratios.emplace(i, &report.multiplicity[at++]);
        }
    }

    std::ostringstream out;
    out << "i,dim,lower_bound,binom_ref,ratio_n_fact_dim_over_i_pow_n\n";
    for (const auto& [i, dim] : report.series.entries) {
        out << i << "," << dim << ",";
        auto c = checks.find(i);
        if (c != checks.end()) {
            out << (c->second->pass ? "pass" : "fail") << "," << c->second->bound.get_str();
        } else {
            out << ",";
        }
        out << ",";
        auto r = ratios.find(i);
        if (r != ratios.end()) out << r->second->get_str();
        out << "\n";
    }
    return out.str();
}

nlohmann::json report_json(const FiltrationReport& report) {
    nlohmann::json series;
    series["nvars"] = report.series.nvars;
    series["field"] = report.series.field_desc;
    series["module"] = report.series.module_desc;
    series["generator"] = report.series.generator_desc;
    series["entries"] = nlohmann::json::array();
    for (const auto& [i, dim] : report.series.entries) {
        series["entries"].push_back({{"i", i}, {"dim", dim}});
    }

    nlohmann::json j;
    j["series"] = std::move(series);
    if (report.offset.has_value()) j["offset"] = *report.offset;
    j["lower_bound"] = nlohmann::json::array();
    for (const auto& c : report.lower_bound) {
        j["lower_bound"].push_back({{"i", c.level}, {"bound", c.bound.get_str()}, {"pass", c.pass}});
    }
    j["holonomy_constant"] = report.holonomy_c.get_str();
    j["length_bound"] = report.len_bound.get_str();
    j["multiplicity"] = nlohmann::json::array();
    for (const auto& m : report.multiplicity) j["multiplicity"].push_back(m.get_str());
    j["all_bounds_pass"] = report.all_bounds_pass();
    return j;
}

} // namespace dpd
