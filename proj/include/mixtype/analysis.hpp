#pragma once

#include "mixtype/integrator.hpp"
#include "mixtype/problem_kind.hpp"
#include "mixtype/profiles.hpp"
#include "mixtype/system.hpp"

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace mixtype {

/// Separable space-time test function rho(t) * sigma(x).
struct TestFunction {
    std::string id;
    TimeProfile rho;
    SpatialProfile sigma;
    bool smooth = true; // false marks oscillatory canaries

    double operator()(double t, double x) const { return rho(t) * sigma(x); }
};

/// The default certification set: 8 smooth test functions plus 2 oscillatory
/// canaries (thresholds apply to the smooth set only).
std::vector<TestFunction> default_test_set();

/// E = (1/2) dx <M v, v>.
double energy(const DiscreteSystem& system, std::span<const double> state);

/// sqrt(dx * sum v_i^2) over all dofs present in the field layout.
double state_norm(const StaggeredGrid& grid, std::span<const double> state);

/// dx * sum_i u_i (the integral of u over [0,1]; equals the mean).
double spatial_mean_u(const StaggeredGrid& grid, std::span<const double> state);

/// Trapezoidal approximation of ( int ||v(t)||^2_{L^2(0,1)} e^{-2 nu t} dt )^{1/2}.
/// Negative nu is allowed on the finite window.
double weighted_space_time_norm(const SpaceTimeField& field, double nu);

/// Space-time quadrature of  iint u(t,x) rho(t) sigma(x) dx dt  over the
/// u-part (midpoint in x, trapezoid in t).
double pair_with_test_function(const SpaceTimeField& field, const TestFunction& tf);

struct ConvergenceRow {
    int n = 0;
    std::string testfn;
    bool smooth = true;
    double pairing_fine = 0;
    double pairing_limit = 0;
    double abs_error = 0;
    std::optional<double> empirical_order; // log2(e(n/2)/e(n)) when n/2 is in the sweep
};

struct WeakConvergenceReport {
    std::vector<ConvergenceRow> rows; // ordered by (n, test function)
};

/// Pairing errors e(n, i) = |<u_n, phi_i> - <u, phi_i>| for each fine field
/// against the limit field. All fields must share the time grid.
WeakConvergenceReport weak_convergence_report(const std::vector<std::pair<int, const SpaceTimeField*>>& fine,
                                              const SpaceTimeField& limit,
                                              const std::vector<TestFunction>& tests);

/// Same table built from precomputed pairings (lets the caller drop each fine
/// trajectory after pairing it). fine_pairings[i].second[j] pairs field i with
/// tests[j].
WeakConvergenceReport
weak_convergence_from_pairings(const std::vector<std::pair<int, std::vector<double>>>& fine_pairings,
                               const std::vector<double>& limit_pairings,
                               const std::vector<TestFunction>& tests);

struct DecayReport {
    double rate = 0;      // least-squares slope of log(trace) on the window
    double intercept = 0; // fitted log(trace) at t = 0
    double residual = 0;  // RMS deviation of the fit
    double t1 = 0, t2 = 0;
    std::string quantity; // state-norm | energy | spatial-mean
    bool degenerate = false; // trace not positive on the window
};

/// Least-squares slope of log(trace) over [t1, t2]. Non-positive samples in
/// the window yield a degenerate report with rate 0.
DecayReport fit_decay_rate(const std::vector<double>& times, const std::vector<double>& trace,
                           double t1, double t2, const std::string& quantity = "");

struct ModeEigenvalues {
    int k = 0;
    double symbol = 0;                       // d_k
    std::complex<double> lambda1, lambda2;   // discrete-symbol roots (or continuum)
    std::complex<double> cont1, cont2;       // continuum roots (d_k = k pi)
};

struct SpectrumReport {
    ProblemKind kind;
    bool discrete = false;
    std::vector<ModeEigenvalues> modes; // k = 0..k_max
    double abscissa = 0;                // max over modes of Re(lambda)
};

/// Per-mode roots of det(lambda M2 + N2 + A_k) = 0 with
/// A_k = [[0, -d_k], [d_k, 0]]; d_k = k pi in the continuum or
/// (2/dx) sin(k pi dx / 2) on a grid. LimitHE roots are -1 +- 2 d_k i
/// (abscissa -1); LimitHP roots solve lambda^2 + lambda + 2 d_k^2 = 0
/// (abscissa 0 from the k = 0 constant mode).
SpectrumReport limit_spectrum(const ProblemKind& kind, const std::optional<StaggeredGrid>& grid,
                              int k_max);

struct JunctionJumpReport {
    double indicator = 0; // max junction jump / max global jump
    bool degenerate = false;
};

/// Continuity diagnostic: max over junctions and times of |u_{i+1} - u_i|
/// adjacent to each junction, normalized by the max difference quotient over
/// the non-junction pairs. O(1) values under refinement signal a
/// discontinuity; values -> 0 confirm continuity.
JunctionJumpReport junction_jump_report(const SpaceTimeField& field, const MaterialLayout& layout);

} // namespace mixtype
