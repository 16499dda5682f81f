#pragma once

#include <stdexcept>
#include <string>

namespace mixtype {

/// Grid not aligned to the periodic microstructure (junction off a node).
struct AlignmentError : std::runtime_error {
    explicit AlignmentError(const std::string& what) : std::runtime_error(what) {}
};

/// Step matrix exactly singular; message names the offending dof.
struct SingularMatrixError : std::runtime_error {
    explicit SingularMatrixError(const std::string& what) : std::runtime_error(what) {}
};

/// NaN/Inf detected in a solver state; message carries the step index.
struct DivergenceError : std::runtime_error {
    explicit DivergenceError(const std::string& what) : std::runtime_error(what) {}
};

/// Explicit scheme outside its stability region.
struct StabilityError : std::runtime_error {
    explicit StabilityError(const std::string& what) : std::runtime_error(what) {}
};

/// Fields cannot be compared (mismatched time grids).
struct ComparabilityError : std::runtime_error {
    explicit ComparabilityError(const std::string& what) : std::runtime_error(what) {}
};

/// Config file rejected; message carries the line number.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace mixtype
