// Command-line driver: operator calculator, filtration growth reports and
// the seeded verification suites.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dpd/error.hpp"
#include "dpd/parse.hpp"
#include "dpd/report.hpp"
#include "dpd/selftest.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitBadConfig = 2;
constexpr int kExitBudget = 3;

struct CommonOptions {
    std::size_t nvars = 1;
    std::uint64_t characteristic = 0;
    std::string f_text;
    std::uint32_t i_max = 4;
    std::uint64_t seed = 1;
    std::string out_path;
    std::string format = "csv";
};

void add_common_flags(CLI::App* cmd, CommonOptions& opt) {
    cmd->add_option("--n", opt.nvars, "number of variables")->check(CLI::PositiveNumber);
    cmd->add_option("--char", opt.characteristic, "field characteristic (0 or a prime)");
    cmd->add_option("--seed", opt.seed, "seed for randomized suites");
}

void write_output(const std::string& path, const std::string& payload) {
    if (path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << payload;
}

nlohmann::json config_echo(const CommonOptions& opt) {
    nlohmann::json j;
    j["n"] = opt.nvars;
    j["char"] = opt.characteristic;
    if (!opt.f_text.empty()) j["f"] = opt.f_text;
    j["i_max"] = opt.i_max;
    j["seed"] = opt.seed;
    j["format"] = opt.format;
    return j;
}

int run_calc(const CommonOptions& opt, const std::string& expr, const std::string& target) {
    dpd::Field k = dpd::Field::of_characteristic(opt.characteristic);
    dpd::DiffOp a = dpd::parse_operator(expr, opt.nvars, k);
    std::cout << a.str() << "\n";
    if (target.empty()) return kExitOk;

    if (!opt.f_text.empty()) {
        dpd::Polynomial f = dpd::parse_polynomial(opt.f_text, opt.nvars, k);
        dpd::ContextPtr ctx = dpd::make_context(std::move(f));
        dpd::Fraction u = dpd::parse_fraction(target, ctx);
        std::cout << dpd::apply(a, u).str() << "\n";
    } else {
        dpd::Polynomial g = dpd::parse_polynomial(target, opt.nvars, k);
        std::cout << a.apply(g).str() << "\n";
    }
    return kExitOk;
}

int run_dim_growth(const CommonOptions& opt) {
    dpd::Field k = dpd::Field::of_characteristic(opt.characteristic);

    dpd::FiltrationReport cyclic;
    std::optional<dpd::FiltrationReport> localized;

    if (!opt.f_text.empty()) {
        dpd::Polynomial f = dpd::parse_polynomial(opt.f_text, opt.nvars, k);
        dpd::ContextPtr ctx = dpd::make_context(std::move(f));
        dpd::DimensionSeries s = dpd::cyclic_filtration_dims(
            dpd::Elem(dpd::Fraction::inverse_denominator(ctx)), dpd::FracSpace{ctx, 0}, opt.i_max);
        s.module_desc = "localization at f = " + ctx->denominator().str();
        s.generator_desc = "1/f^1";
        cyclic = dpd::build_report(std::move(s), 0);
        localized = dpd::build_report(dpd::mf_filtration_dims(ctx, opt.i_max), 0);
    } else {
        dpd::DimensionSeries s = dpd::cyclic_filtration_dims(
            dpd::Elem(dpd::Polynomial::of_int(opt.nvars, 1, k)), dpd::PolySpace{opt.nvars, k},
            opt.i_max);
        s.module_desc = "polynomial ring";
        s.generator_desc = "1";
        // the cyclic dims of 1 must reproduce the degree filtration exactly
        dpd::DimensionSeries closed = dpd::degree_filtration_dims(opt.nvars, k, opt.i_max);
        if (s.entries != closed.entries) {
            std::cerr << "cyclic dimensions of 1 disagree with the degree filtration\n";
            return kExitCheckFailed;
        }
        cyclic = dpd::build_report(std::move(s), 0);
    }

    std::string payload;
    if (opt.format == "csv") {
        payload = dpd::report_csv(cyclic);
    } else {
        nlohmann::json j;
        j["config"] = config_echo(opt);
        j["cyclic"] = dpd::report_json(cyclic);
        if (localized.has_value()) j["localized"] = dpd::report_json(*localized);
        payload = j.dump(2) + "\n";
    }
    write_output(opt.out_path, payload);

    bool pass = cyclic.all_bounds_pass() && (!localized || localized->all_bounds_pass());
    return pass ? kExitOk : kExitCheckFailed;
}

int run_verify(const CommonOptions& opt, const std::string& suite,
               std::optional<std::uint32_t> corrupt_level) {
    dpd::VerifyConfig config;
    config.nvars = opt.nvars;
    config.field = dpd::Field::of_characteristic(opt.characteristic);
    config.i_max = opt.i_max;
    config.seed = opt.seed;
    config.corrupt_level = corrupt_level;
    if (!opt.f_text.empty()) {
        config.f = dpd::parse_polynomial(opt.f_text, opt.nvars, config.field);
    }

    dpd::SuiteResult result;
    if (suite == "relations") {
        result = dpd::run_relations_suite(config);
    } else if (suite == "localization") {
        result = dpd::run_localization_suite(config);
    } else if (suite == "quotient") {
        result = dpd::run_quotient_suite(config);
    } else if (suite == "bounds") {
        result = dpd::run_bounds_suite(config);
    } else {
        std::cerr << "unknown suite: " << suite << "\n";
        return kExitBadConfig;
    }
    std::cout << result.summary();
    return result.passed() ? kExitOk : kExitCheckFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact divided-power differential operators over QQ and GF(p)"};
    app.require_subcommand(1);

    CommonOptions opt;
    std::string expr, target, suite = "relations";
    std::optional<std::uint32_t> corrupt_level;

    CLI::App* calc = app.add_subcommand("calc", "normalize an operator and apply it");
    add_common_flags(calc, opt);
    calc->add_option("--expr", expr, "operator expression")->required();
    calc->add_option("--target", target, "polynomial (or fraction, with --f) to apply to");
    calc->add_option("--f", opt.f_text, "denominator fixing the fraction context");

    CLI::App* growth = app.add_subcommand("dim-growth", "filtration dimension report");
    add_common_flags(growth, opt);
    growth->add_option("--f", opt.f_text, "localize at this denominator");
    growth->add_option("--i-max", opt.i_max, "largest filtration level");
    growth->add_option("--out", opt.out_path, "output path (default: stdout)");
    growth->add_option("--format", opt.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    CLI::App* verify = app.add_subcommand("verify", "run a seeded verification suite");
    add_common_flags(verify, opt);
    verify->add_option("--suite", suite, "relations, localization, quotient or bounds")
        ->check(CLI::IsMember({"relations", "localization", "quotient", "bounds"}));
    verify->add_option("--f", opt.f_text, "denominator for localization/bounds suites");
    verify->add_option("--i-max", opt.i_max, "largest filtration level");
    verify
        ->add_option("--corrupt-level", corrupt_level,
                     "test hook: corrupt the series at this level (bounds suite)")
        ->group(""); // hidden

    CLI11_PARSE(app, argc, argv);

    try {
        if (calc->parsed()) return run_calc(opt, expr, target);
        if (growth->parsed()) return run_dim_growth(opt);
        return run_verify(opt, suite, corrupt_level);
    } catch (const dpd::budget_error& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const dpd::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitBadConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid configuration: " << e.what() << "\n";
        return kExitBadConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadConfig;
    }
}
