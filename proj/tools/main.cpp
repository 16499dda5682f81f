#include "mixtype/config.hpp"
#include "mixtype/errors.hpp"
#include "mixtype/runner.hpp"
#include "mixtype/version.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <exception>

namespace {

// exit status contract: 0 ok, 1 validation failures, 2 configuration errors,
// 3 numerical failure
constexpr int kOk = 0;
constexpr int kValidationFailure = 1;
constexpr int kConfigError = 2;
constexpr int kNumericalFailure = 3;

int dispatch(const std::string& command, const std::string& config_path, int kmax) {
    const mixtype::ExperimentConfig cfg = mixtype::load_config(config_path);

    if (command == "solve") {
        const auto res = mixtype::run_solve(cfg);
        std::printf("solve: wrote %s, %s, %s\n", res.field_u_path.c_str(),
                    res.field_w_path.c_str(), res.traces_path.c_str());
        return kOk;
    }
    if (command == "sweep") {
        const auto res = mixtype::run_sweep(cfg);
        std::printf("sweep: wrote %s (%zu rows)\n", res.convergence_csv_path.c_str(),
                    res.report.rows.size());
        return kOk;
    }
    if (command == "stability") {
        const auto res = mixtype::run_stability(cfg);
        std::printf("stability: %s (energy rate %.6g, residual %.3g); wrote %s, %s\n",
                    res.verdict.c_str(), res.energy_fit.rate, res.energy_fit.residual,
                    res.stability_json_path.c_str(), res.svg_path.c_str());
        return kOk;
    }
    if (command == "spectrum") {
        const auto res = mixtype::run_spectrum(cfg, kmax);
        std::printf("spectrum: abscissa %.17g (discrete), %.17g (continuum); wrote %s\n",
                    res.discrete.abscissa, res.continuum.abscissa,
                    res.spectrum_json_path.c_str());
        return kOk;
    }
    if (command == "validate") {
        const auto res = mixtype::run_validate(cfg);
        for (const auto& item : res.items)
            std::printf("[%s] %-26s %s\n", item.pass ? "pass" : "FAIL", item.id.c_str(),
                        item.detail.c_str());
        std::printf("validate: %s; wrote %s\n", res.all_pass ? "all checks passed" : "FAILURES",
                    res.validation_json_path.c_str());
        return res.all_pass ? kOk : kValidationFailure;
    }
    if (command == "mean-check") {
        const auto res = mixtype::run_mean_check(cfg);
        std::printf("mean-check: %s; wrote %s\n",
                    res.all_pass ? "closed forms reproduced" : "FAILURES", res.csv_path.c_str());
        return res.all_pass ? kOk : kValidationFailure;
    }
    std::fprintf(stderr, "unknown command '%s'\n", command.c_str());
    return kConfigError;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"mixtype: hyperbolic-elliptic / hyperbolic-parabolic homogenization lab"};
    app.set_version_flag("--version", mixtype::kVersion);
    app.require_subcommand(1);

    std::string config_path;
    int kmax = -1;

    for (const char* name :
         {"solve", "sweep", "stability", "spectrum", "validate", "mean-check"}) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("--config", config_path, "experiment config file")->required();
        if (std::string(name) == "spectrum")
            sub->add_option("--kmax", kmax, "largest mode number (default min(nx-1, 32))");
    }

    CLI11_PARSE(app, argc, argv);

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        return dispatch(command, config_path, kmax);
    } catch (const mixtype::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kConfigError;
    } catch (const mixtype::AlignmentError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kConfigError;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kConfigError;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kConfigError;
    } catch (const mixtype::DivergenceError& e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return kNumericalFailure;
    } catch (const mixtype::StabilityError& e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return kNumericalFailure;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kNumericalFailure;
    }
}
