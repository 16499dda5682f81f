#pragma once

#include "mixtype/banded.hpp"
#include "mixtype/profiles.hpp"
#include "mixtype/system.hpp"

#include <cmath>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace mixtype {

/// Uniform time grid [t_start, t_end] with K = round((t_end - t_start)/dt)
/// steps. Causality convention: the forcing vanishes for t <= t_start, so the
/// zero initial state is consistent.
struct TimeGrid {
    double t_start = 0;
    double t_end = 1;
    double dt = 1e-2;

    int num_steps() const { return int(std::lround((t_end - t_start) / dt)); }
    double time(int k) const { return t_start + k * dt; }
};

TimeGrid make_time_grid(double t_start, double t_end, double dt);

/// Smooth compactly supported temporal bump
///   phi(t) = amplitude * (4 (t - t_on)(t_off - t) / (t_off - t_on)^2)^power
/// on [t_on, t_off], zero outside. C^(power-1); derivative and antiderivative
/// in closed form.
struct BumpPhi {
    double t_on = 0.5;
    double t_off = 1.5;
    double amplitude = 1.0;
    int power = 3;

    double operator()(double t) const;
    double deriv(double t) const;
    /// int_{-inf}^t phi
    double integral(double t) const;
    /// int phi over its whole support: amplitude * L * 4^p * (p!)^2/(2p+1)!
    double total_integral() const;
};

/// Separable forcing f(t,x) = phi(t) g(x), entering the u-row only:
/// F = (phi(t) g(x), 0).
struct ForcingSpec {
    BumpPhi phi;
    SpatialProfile profile;

    std::string name() const;
    /// Samples (phi(t) g(x_i))_i on the u-dofs, zero on the w-dofs.
    void sample(const StaggeredGrid& grid, double t, std::span<double> out) const;
};

/// A trajectory of stacked states over a uniform time grid. states[0] = 0.
/// Full-state fields hold (u | w); the second-order oracle emits u-only fields.
struct SpaceTimeField {
    enum class Layout { FullState, UOnly };

    StaggeredGrid grid;
    TimeGrid time;
    Layout layout = Layout::FullState;
    std::vector<std::vector<double>> states; // num_steps()+1 entries
    std::string forcing_id;

    int state_dim() const { return layout == Layout::FullState ? grid.dim() : grid.num_u(); }
    /// View of the u-part of state k.
    std::span<const double> u_part(int k) const {
        return std::span<const double>(states[k].data(), grid.num_u());
    }
};

/// Reusable factorization of the step matrix (M/dt + theta (N + A)) in an
/// interleaved dof ordering where it is tridiagonal.
class StepFactorization {
public:
    StepFactorization(const DiscreteSystem& system, double dt, double theta);

    double dt() const { return dt_; }
    double theta() const { return theta_; }

    /// One theta-step: solves
    ///   (M/dt + theta(N+A)) v1 = (M/dt - (1-theta)(N+A)) v0
    ///                           + theta F1 + (1-theta) F0.
    void advance(const DiscreteSystem& system, std::span<const double> v0,
                 std::span<const double> f0, std::span<const double> f1,
                 std::span<double> v1) const;

private:
    double dt_, theta_;
    int num_u_, num_w_;
    std::unique_ptr<BandedLU> lu_;
    mutable std::vector<double> scratch_; // interleaved rhs
};

inline StepFactorization factor_step_matrix(const DiscreteSystem& system, double dt,
                                            double theta) {
    return StepFactorization(system, dt, theta);
}

/// v_{k+1} from v_k; throws DivergenceError on NaN/Inf in the result.
std::vector<double> advance(const StepFactorization& fac, const DiscreteSystem& system,
                            std::span<const double> v_k, std::span<const double> f_k,
                            std::span<const double> f_k1);

/// Integrates d/dt(Mv) + Nv + Av = F from the zero state with the theta
/// scheme, forcing sampled at the grid times. Throws DivergenceError with the
/// step index on failure.
SpaceTimeField solve_evolution(const DiscreteSystem& system, const ForcingSpec& forcing,
                               const TimeGrid& time, double theta);

/// Same recurrence with an arbitrary forcing sampler F(t) (used for
/// superposition checks; the sampler fills the full stacked vector).
using ForcingSampler = std::function<void(double t, std::span<double> out)>;
SpaceTimeField solve_evolution(const DiscreteSystem& system, const ForcingSampler& forcing,
                               const TimeGrid& time, double theta, const std::string& forcing_id);

} // namespace mixtype
