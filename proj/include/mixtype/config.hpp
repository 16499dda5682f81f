#pragma once

#include "mixtype/problem_kind.hpp"
#include "mixtype/profiles.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mixtype {

/// A fully validated experiment description. Parsed from the flat
/// `key = value` format (dotted sections, `#` comments); all runs driven by a
/// config are deterministic, so identical configs reproduce identical outputs.
struct ExperimentConfig {
    ProblemKind problem = ProblemKind::limit_he();
    int nx = 256;
    double dt = 2e-3;
    std::optional<double> theta; // when unset: 1/2 for limit/wave, 1 for singular-M kinds
    double t_start = 0.0;
    double t_end = 12.0;

    double forcing_t_on = 0.5;
    double forcing_t_off = 1.5;
    double forcing_amp = 1.0;
    int forcing_power = 3;
    SpatialProfile forcing_profile = SpatialProfile::constant();

    std::vector<double> nu_list{1.0};
    std::vector<int> sweep;
    std::string out_dir = "out";

    /// theta actually used for a given problem kind.
    double theta_for(const ProblemKind& kind) const;
};

/// Parse and validate config text. Throws ConfigError with a line number on
/// unknown keys, malformed values, or invariant violations.
ExperimentConfig parse_config(const std::string& text);

/// Convenience: read a file and parse it.
ExperimentConfig load_config(const std::string& path);

/// Canonical `key = value` rendering (stable ordering, full precision).
std::string render_config(const ExperimentConfig& cfg);

} // namespace mixtype
