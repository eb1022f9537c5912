// Command line front end: series/kernel evaluation, covering-number bound
// tables, desk-scale empirical runs, and the library's verification suite.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or domain error.
// Data goes to stdout, diagnostics to stderr.

#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "wfk/entropy_bounds.hpp"
#include "wfk/entropy_empirical.hpp"
#include "wfk/kernel.hpp"
#include "wfk/text.hpp"
#include "wfk/verify.hpp"

namespace {

struct CliConfig {
    double a = 0.5;
    int b = 3;
    double tol = wfk::kDefaultTol;
    std::vector<double> eps_list;
    int grid_count = 10001;
    int samples = 2000;
    int trunc_order = 6;
    std::uint64_t seed = 0;
    std::string format = "csv";
    bool tight = false;
    int workers = 0;
};

void add_param_flags(CLI::App* cmd, CliConfig& cfg) {
    cmd->add_option("--a", cfg.a, "Amplitude ratio, 0 < a < 1")->capture_default_str();
    cmd->add_option("--b", cfg.b, "Integer frequency base, b >= 2")->capture_default_str();
}

void add_table_flags(CLI::App* cmd, CliConfig& cfg) {
    cmd->add_option("--eps", cfg.eps_list, "Radius eps (repeatable)");
    cmd->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
}

int run_eval(const CliConfig& cfg, double x, std::optional<double> y) {
    const auto params = wfk::make_params(cfg.a, cfg.b);
    if (std::fabs(x) > 1.0 || (y && std::fabs(*y) > 1.0)) {
        throw wfk::DomainError("evaluation points must lie in [-1, 1]");
    }
    const double v = y ? wfk::eval_kernel(params, x, *y, cfg.tol)
                       : wfk::eval_weierstrass(params, x, cfg.tol);
    std::cout << wfk::format_real(v) << "\n";
    return 0;
}

int run_bounds(const CliConfig& cfg) {
    const auto params = wfk::make_params(cfg.a, cfg.b);
    const auto rows = wfk::bound_table(params, cfg.eps_list, cfg.tight);
    for (const auto& r : rows) {
        if (!r.lower_ln_cover) {
            std::cerr << "warning: lower bound degenerate at eps = " << wfk::format_real(r.eps)
                      << "; cell left empty\n";
        }
    }
    if (cfg.format == "json") {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& r : rows) out.push_back(wfk::bound_to_json(r));
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << wfk::bound_csv_header() << "\n";
        for (const auto& r : rows) std::cout << wfk::bound_csv_row(r) << "\n";
    }
    return 0;
}

int run_empirical(const CliConfig& cfg) {
    const auto params = wfk::make_params(cfg.a, cfg.b);
    const auto rows = wfk::empirical_report(params, cfg.eps_list, cfg.trunc_order, cfg.samples,
                                            cfg.grid_count, cfg.seed, cfg.workers);
    for (const auto& r : rows) {
        if (!r.bounds.lower_ln_cover) {
            std::cerr << "warning: lower bound degenerate at eps = "
                      << wfk::format_real(r.bounds.eps) << "; cell left empty\n";
        }
    }
    if (cfg.format == "json") {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& r : rows) out.push_back(wfk::empirical_to_json(r));
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << wfk::empirical_csv_header() << "\n";
        for (const auto& r : rows) std::cout << wfk::empirical_csv_row(r) << "\n";
    }
    return 0;
}

int run_verify(const CliConfig& cfg, bool inject_gram_sign_flip) {
    wfk::VerifyOptions options;
    options.params = wfk::make_params(cfg.a, cfg.b);
    options.tol = cfg.tol;
    options.grid_count = cfg.grid_count;
    options.samples = cfg.samples;
    options.trunc_order = cfg.trunc_order;
    options.seed = cfg.seed;
    options.workers = cfg.workers;
    options.inject_gram_sign_flip = inject_gram_sign_flip;
    const auto results = wfk::run_verification(options);
    for (const auto& r : results) {
        if (r.passed) {
            std::cout << "ok   " << r.name << "\n";
        } else {
            std::cout << "FAIL " << r.name << ": " << r.detail << "\n";
        }
    }
    const bool ok = wfk::all_passed(results);
    std::cout << (ok ? "verification passed" : "verification FAILED") << "\n";
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weierstrass fractal kernel toolkit"};
    app.require_subcommand(1);
    CliConfig cfg;

    double eval_x = 0.0;
    std::optional<double> eval_y;
    CLI::App* eval = app.add_subcommand("eval", "Evaluate w(x) or the kernel W(x, y)");
    add_param_flags(eval, cfg);
    eval->add_option("--tol", cfg.tol, "Series truncation tolerance")->capture_default_str();
    eval->add_option("--x", eval_x, "Evaluation point in [-1, 1]")->required();
    eval->add_option("--y", eval_y, "Second kernel argument in [-1, 1]");

    CLI::App* bounds = app.add_subcommand("bounds", "Analytic covering-number bound table");
    add_param_flags(bounds, cfg);
    add_table_flags(bounds, cfg);
    bounds->add_flag("--tight", cfg.tight, "Use the head-norm variant of the upper bound");

    CLI::App* empirical =
        app.add_subcommand("empirical", "Packing/cover brackets against the analytic bounds");
    add_param_flags(empirical, cfg);
    add_table_flags(empirical, cfg);
    empirical->add_option("--grid-count", cfg.grid_count, "Sup-norm grid points")
        ->capture_default_str();
    empirical->add_option("--samples", cfg.samples, "Unit ball sample count")
        ->capture_default_str();
    empirical->add_option("--trunc-N", cfg.trunc_order, "Truncation order of the sampled family")
        ->capture_default_str();
    empirical->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
    empirical->add_option("--workers", cfg.workers, "Worker threads (0 = hardware)")
        ->capture_default_str();

    bool inject_gram_sign_flip = false;
    CLI::App* verify = app.add_subcommand("verify", "Run every module's invariant suite");
    add_param_flags(verify, cfg);
    verify->add_option("--tol", cfg.tol, "Series truncation tolerance")->capture_default_str();
    verify->add_option("--grid-count", cfg.grid_count, "Sup-norm grid points")
        ->capture_default_str();
    verify->add_option("--samples", cfg.samples, "Unit ball sample count")->capture_default_str();
    verify->add_option("--trunc-N", cfg.trunc_order, "Truncation order for desk-scale suites")
        ->capture_default_str();
    verify->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
    verify->add_option("--workers", cfg.workers, "Worker threads (0 = hardware)")
        ->capture_default_str();
    verify->add_flag("--inject-gram-sign-flip", inject_gram_sign_flip)->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (eval->parsed()) return run_eval(cfg, eval_x, eval_y);
        if (bounds->parsed()) {
            if (cfg.eps_list.empty()) cfg.eps_list = {1e-2, 1e-3, 1e-4, 1e-5, 1e-6, 1e-7, 1e-8};
            return run_bounds(cfg);
        }
        if (empirical->parsed()) {
            if (cfg.eps_list.empty()) cfg.eps_list = {1.0, 0.5, 0.25, 0.1};
            return run_empirical(cfg);
        }
        if (verify->parsed()) return run_verify(cfg, inject_gram_sign_flip);
    } catch (const wfk::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const wfk::ParamMismatchError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
