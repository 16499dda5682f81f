#include "mixtype/integrator.hpp"

#include "mixtype/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace mixtype {

TimeGrid make_time_grid(double t_start, double t_end, double dt) {
    if (!(dt > 0.0))
        throw std::invalid_argument("time grid: dt must be positive");
    if (!(t_end > t_start))
        throw std::invalid_argument("time grid: t_end must exceed t_start");
    TimeGrid tg{t_start, t_end, dt};
    if (tg.num_steps() < 1)
        throw std::invalid_argument("time grid: fewer than one step");
    return tg;
}

double BumpPhi::operator()(double t) const {
    if (t <= t_on || t >= t_off)
        return 0.0;
    const double len = t_off - t_on;
    const double s = 4.0 * (t - t_on) * (t_off - t) / (len * len);
    return amplitude * std::pow(s, power);
}

double BumpPhi::deriv(double t) const {
    if (t <= t_on || t >= t_off)
        return 0.0;
    const double len = t_off - t_on;
    const double s = 4.0 * (t - t_on) * (t_off - t) / (len * len);
    const double ds = 4.0 * (t_on + t_off - 2.0 * t) / (len * len);
    return amplitude * power * std::pow(s, power - 1) * ds;
}

double BumpPhi::integral(double t) const {
    // Binomial expansion of (4 s (1-s))^p in the unit period coordinate.
    const double len = t_off - t_on;
    double s = (t - t_on) / len;
    s = std::min(1.0, std::max(0.0, s));
    double sum = 0.0;
    double binom = 1.0; // C(p, m)
    for (int m = 0; m <= power; ++m) {
        const int q = power + m + 1;
        const double sign = (m % 2 == 0) ? 1.0 : -1.0;
        sum += sign * binom * std::pow(s, q) / q;
        binom = binom * (power - m) / (m + 1);
    }
    return amplitude * len * std::pow(4.0, power) * sum;
}

double BumpPhi::total_integral() const { return integral(t_off); }

std::string ForcingSpec::name() const {
    return "bump(t_on=" + std::to_string(phi.t_on) + ",t_off=" + std::to_string(phi.t_off) +
           ",amp=" + std::to_string(phi.amplitude) + ",p=" + std::to_string(phi.power) + ")*" +
           profile.name();
}

void ForcingSpec::sample(const StaggeredGrid& grid, double t, std::span<double> out) const {
    const double ft = phi(t);
    const int nu = grid.num_u();
    for (int i = 0; i < nu; ++i)
        out[i] = ft * profile(grid.u_coord(i));
    for (int j = nu; j < grid.dim(); ++j)
        out[j] = 0.0;
}

namespace {

// Interleaved ordering u_0 w_0 u_1 w_1 ... u_{N-1}: the step matrix is
// tridiagonal there (u_i couples w_{i-1}, w_i; w_j couples u_j, u_{j+1}).
inline int pos_u(int i) { return 2 * i; }
inline int pos_w(int j) { return 2 * j + 1; }

std::string dof_name(int col) {
    if (col % 2 == 0)
        return "u-dof " + std::to_string(col / 2);
    return "w-dof " + std::to_string((col - 1) / 2);
}

} // namespace

StepFactorization::StepFactorization(const DiscreteSystem& system, double dt, double theta)
    : dt_(dt), theta_(theta), num_u_(system.grid.num_u()), num_w_(system.grid.num_w()),
      scratch_(system.grid.dim()) {
    if (!(dt > 0.0))
        throw std::invalid_argument("factor_step_matrix: dt must be positive");
    if (!(theta >= 0.5 && theta <= 1.0))
        throw std::invalid_argument("factor_step_matrix: theta must lie in [1/2, 1]");

    const int dim = system.grid.dim();
    const double g = theta / system.grid.dx();

    BandedMatrix a(dim, 1, 1);
    for (int i = 0; i < num_u_; ++i) {
        a.set(pos_u(i), pos_u(i), system.m_diag[i] / dt + theta * system.n_diag[i]);
        if (i > 0)
            a.set(pos_u(i), pos_w(i - 1), g);
        if (i < num_u_ - 1)
            a.set(pos_u(i), pos_w(i), -g);
    }
    for (int j = 0; j < num_w_; ++j) {
        const int d = num_u_ + j;
        a.set(pos_w(j), pos_w(j), system.m_diag[d] / dt + theta * system.n_diag[d]);
        a.set(pos_w(j), pos_u(j), g);
        a.set(pos_w(j), pos_u(j + 1), -g);
    }
    lu_ = std::make_unique<BandedLU>(a, dof_name);
}

void StepFactorization::advance(const DiscreteSystem& system, std::span<const double> v0,
                                std::span<const double> f0, std::span<const double> f1,
                                std::span<double> v1) const {
    const int dim = system.grid.dim();
    // rhs = (M/dt) v0 - (1-theta)(N + A) v0 + theta f1 + (1-theta) f0
    system.apply_skew(v0, v1); // v1 holds A v0
    const double om = 1.0 - theta_;
    for (int i = 0; i < dim; ++i) {
        const double nv = system.n_diag[i] * v0[i] + v1[i];
        scratch_[i] = system.m_diag[i] / dt_ * v0[i] - om * nv + theta_ * f1[i] + om * f0[i];
    }
    // permute to interleaved, solve, permute back
    for (int i = 0; i < num_u_; ++i)
        v1[pos_u(i)] = scratch_[i];
    for (int j = 0; j < num_w_; ++j)
        v1[pos_w(j)] = scratch_[num_u_ + j];
    lu_->solve(v1);
    for (int i = 0; i < num_u_; ++i)
        scratch_[i] = v1[pos_u(i)];
    for (int j = 0; j < num_w_; ++j)
        scratch_[num_u_ + j] = v1[pos_w(j)];
    for (int i = 0; i < dim; ++i) {
        if (!std::isfinite(scratch_[i]))
            throw DivergenceError("advance: non-finite value at " +
                                  (i < num_u_ ? "u-dof " + std::to_string(i)
                                              : "w-dof " + std::to_string(i - num_u_)));
        v1[i] = scratch_[i];
    }
}

std::vector<double> advance(const StepFactorization& fac, const DiscreteSystem& system,
                            std::span<const double> v_k, std::span<const double> f_k,
                            std::span<const double> f_k1) {
    std::vector<double> v1(system.grid.dim());
    fac.advance(system, v_k, f_k, f_k1, v1);
    return v1;
}

SpaceTimeField solve_evolution(const DiscreteSystem& system, const ForcingSampler& forcing,
                               const TimeGrid& time, double theta,
                               const std::string& forcing_id) {
    const int dim = system.grid.dim();
    const int steps = time.num_steps();
    StepFactorization fac(system, time.dt, theta);

    SpaceTimeField field;
    field.grid = system.grid;
    field.time = time;
    field.layout = SpaceTimeField::Layout::FullState;
    field.forcing_id = forcing_id;
    field.states.assign(steps + 1, std::vector<double>(dim, 0.0));

    std::vector<double> f0(dim, 0.0), f1(dim, 0.0);
    forcing(time.time(0), f0);
    // zero initial data is consistent only if the algebraic rows (m = 0) are
    // unforced at t_start
    for (int i = 0; i < dim; ++i) {
        if (system.m_diag[i] == 0.0 && f0[i] != 0.0)
            throw std::invalid_argument(
                "solve_evolution: nonzero forcing on an algebraic dof at t_start makes the "
                "zero initial state inconsistent");
    }
    for (int k = 0; k < steps; ++k) {
        forcing(time.time(k + 1), f1);
        try {
            fac.advance(system, field.states[k], f0, f1, field.states[k + 1]);
        } catch (const DivergenceError& e) {
            throw DivergenceError(std::string(e.what()) + " (step " + std::to_string(k + 1) +
                                  ", t = " + std::to_string(time.time(k + 1)) + ")");
        }
        std::swap(f0, f1);
    }
    return field;
}

SpaceTimeField solve_evolution(const DiscreteSystem& system, const ForcingSpec& forcing,
                               const TimeGrid& time, double theta) {
    if (forcing.phi.amplitude != 0.0 &&
        (forcing.phi.t_on < time.t_start || forcing.phi.t_off > time.t_end))
        throw std::invalid_argument("solve_evolution: forcing support [" +
                                    std::to_string(forcing.phi.t_on) + ", " +
                                    std::to_string(forcing.phi.t_off) +
                                    "] not inside the time window");
    auto sampler = [&](double t, std::span<double> out) { forcing.sample(system.grid, t, out); };
    return solve_evolution(system, sampler, time, theta, forcing.name());
}

} // namespace mixtype
