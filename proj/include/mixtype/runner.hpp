#pragma once

#include "mixtype/analysis.hpp"
#include "mixtype/config.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mixtype {

/// Byte-identical CSV outputs are part of the contract; wall-clock times and
/// checksums live only here.
struct RunManifest {
    std::string tool_version;
    std::string config_echo;
    std::vector<std::pair<std::string, std::string>> file_checksums;
    std::vector<std::pair<std::string, double>> wall_ms;
};

struct SolveResult {
    std::string field_u_path, field_w_path, traces_path, manifest_path;
};

/// Solve the configured problem; emit field_u.csv, field_w.csv, traces.csv
/// (t, energy, state_norm, spatial_mean_u) and manifest.json under out_dir.
SolveResult run_solve(const ExperimentConfig& cfg);

struct SweepResult {
    std::string convergence_csv_path, convergence_json_path;
    WeakConvergenceReport report;
};

/// Solve the fine problem for every n in the sweep plus the limit problem of
/// the same family; emit the weak-convergence table.
SweepResult run_sweep(const ExperimentConfig& cfg);

struct StabilityResult {
    std::string stability_json_path, svg_path;
    DecayReport energy_fit;
    DecayReport mean_fit;
    std::string verdict;
    std::optional<double> persistent_value;
    std::map<double, double> weighted_norms;
};

/// Fit the post-forcing decay, classify stable / non-stable, emit
/// stability.json and the log-energy plot decay.svg.
StabilityResult run_stability(const ExperimentConfig& cfg);

struct SpectrumResult {
    std::string spectrum_json_path;
    SpectrumReport discrete, continuum;
};

/// Discrete and continuum symbol spectra of the limit system of the
/// configured family; emits spectrum.json.
SpectrumResult run_spectrum(const ExperimentConfig& cfg, int k_max);

struct ValidationItem {
    std::string id;
    bool pass = false;
    std::string detail;
};

struct ValidationResult {
    std::string validation_json_path;
    std::vector<ValidationItem> items;
    bool all_pass = false;
};

/// The invariant battery: skew-symmetry, adjointness, causality, linearity,
/// the midpoint dissipation identity, solvability constants, spectrum
/// cross-checks and the pairing-defect closed forms.
ValidationResult run_validate(const ExperimentConfig& cfg);

struct MeanCheckResult {
    std::string csv_path;
    bool all_pass = false;
};

/// Weak-* mean checks: pairing defects per (n, profile) with the closed-form
/// references where they exist; emits mean_check.csv.
MeanCheckResult run_mean_check(const ExperimentConfig& cfg);

} // namespace mixtype
