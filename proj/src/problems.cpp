#include "mixtype/problems.hpp"

#include "mixtype/errors.hpp"
#include "mixtype/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mixtype {

DiscreteSystem make_system(const ProblemKind& kind, const StaggeredGrid& grid) {
    MaterialLayout layout;
    layout.family = kind.family();
    if (kind.is_fine())
        layout.n = kind.n;
    return assemble_system(kind, layout, grid);
}

namespace {

struct SecondOrderCoeffs {
    double damping;   // coefficient of d/dt u
    double zeroth;    // coefficient of u
    double speed_sq;  // coefficient of -Laplacian
    double rhs_scale; // multiplies (phi + phi')
};

SecondOrderCoeffs second_order_coeffs(const ProblemKind& kind) {
    if (kind.tag == ProblemTag::LimitHE)
        return {2.0, 1.0, 4.0, 2.0}; // u'' + 2u' + u - 4 u_xx = 2(f + f')
    if (kind.tag == ProblemTag::LimitHP)
        return {1.0, 0.0, 2.0, 1.0}; // u'' + u' - 2 u_xx = f + f'
    throw std::invalid_argument("second-order oracle is defined for the limit problems only");
}

} // namespace

SpaceTimeField solve_second_order_limit(const ProblemKind& kind, const ForcingSpec& forcing,
                                        const StaggeredGrid& grid, const TimeGrid& time,
                                        const SecondOrderOptions& opts) {
    const SecondOrderCoeffs co = second_order_coeffs(kind);
    if (opts.substeps < 1)
        throw std::invalid_argument("second-order oracle: substeps must be >= 1");

    const int n = grid.num_u();
    const double dx = grid.dx();
    const double h = time.dt / opts.substeps;

    // Sharpest resolved symbol of the ghost-cell Neumann Laplacian; the
    // explicit march requires h^2 (zeroth + speed^2 d_max^2) <= 4, i.e.
    // dt <= dx/2 for LimitHE (wave speed 2) and dt <= dx/sqrt(2) for LimitHP.
    const double d_max = (2.0 / dx) * std::sin((n - 1) * 3.14159265358979323846 * dx / 2.0);
    const double margin = h * h * (co.zeroth + co.speed_sq * d_max * d_max);
    if (margin >= 4.0 * (1.0 - 1e-9))
        throw StabilityError("second-order oracle: explicit step h = " + std::to_string(h) +
                             " violates the stability limit (need dt <= dx/" +
                             std::string(kind.tag == ProblemTag::LimitHE ? "2" : "sqrt(2)") +
                             "); use a smaller dt or more substeps");

    std::vector<double> g(n);
    for (int i = 0; i < n; ++i)
        g[i] = forcing.profile(grid.u_coord(i));

    const int steps = time.num_steps();
    SpaceTimeField field;
    field.grid = grid;
    field.time = time;
    field.layout = SpaceTimeField::Layout::UOnly;
    field.forcing_id = forcing.name() + "|second-order-oracle";
    field.states.assign(steps + 1, std::vector<double>(n, 0.0));

    // Central differences with u^0 = u^1 = 0 (forcing vanishes near t_start).
    std::vector<double> u_prev(n, 0.0), u_cur(n, 0.0), u_next(n, 0.0);
    const double a_plus = 1.0 / (h * h) + co.damping / (2.0 * h);
    const double a_minus = 1.0 / (h * h) - co.damping / (2.0 * h);
    const double inv_dx2 = 1.0 / (dx * dx);
    const long total = long(steps) * opts.substeps;
    const double blowup_guard = 1e12 * (1.0 + std::abs(forcing.phi.amplitude));

    long m = 0;
    for (int k = 0; k <= steps; ++k) {
        if (k > 0) {
            for (; m < long(k) * opts.substeps; ++m) {
                const double t = time.t_start + m * h;
                const double drive = co.rhs_scale * (forcing.phi(t) + forcing.phi.deriv(t));
                double peak = 0.0;
                for (int i = 0; i < n; ++i) {
                    const double left = (i > 0) ? u_cur[i - 1] : u_cur[0];
                    const double right = (i < n - 1) ? u_cur[i + 1] : u_cur[n - 1];
                    const double lap = (right - 2.0 * u_cur[i] + left) * inv_dx2;
                    const double rhs = (2.0 / (h * h) - co.zeroth) * u_cur[i] +
                                       co.speed_sq * lap - a_minus * u_prev[i] + drive * g[i];
                    u_next[i] = rhs / a_plus;
                    peak = std::max(peak, std::abs(u_next[i]));
                }
                if (!std::isfinite(peak) || peak > blowup_guard)
                    throw StabilityError("second-order oracle: blow-up detected at t = " +
                                         std::to_string(t + h) + " (substep " + std::to_string(m) +
                                         " of " + std::to_string(total) +
                                         "); use a smaller dt");
                std::swap(u_prev, u_cur);
                std::swap(u_cur, u_next);
            }
        }
        field.states[k] = u_cur;
    }
    return field;
}

std::vector<double> analytic_constant_mode(const ProblemKind& kind, const BumpPhi& phi,
                                           const TimeGrid& time) {
    const int steps = time.num_steps();
    std::vector<double> psi(steps + 1, 0.0);

    if (kind.tag == ProblemTag::LimitHP) {
        // psi' = phi
        for (int k = 0; k <= steps; ++k)
            psi[k] = phi.integral(time.time(k));
        return psi;
    }
    if (kind.tag != ProblemTag::LimitHE)
        throw std::invalid_argument("analytic_constant_mode: kind must be a limit problem");

    // (d/dt + 1)^2 psi = 2(phi + phi'); variation of constants with kernel
    // r e^{-r}, integrated by composite Gauss-Legendre over the bump support.
    auto source = [&](double s) { return 2.0 * (phi(s) + phi.deriv(s)); };
    for (int k = 0; k <= steps; ++k) {
        const double t = time.time(k);
        const double b = std::min(t, phi.t_off);
        if (b <= phi.t_on)
            continue;
        auto integrand = [&](double s) {
            const double r = t - s;
            return r * std::exp(-r) * source(s);
        };
        const int panels = std::max(1, int(std::ceil((b - phi.t_on) / 0.25)));
        double sum = 0.0;
        for (int p = 0; p < panels; ++p) {
            const double s0 = phi.t_on + (b - phi.t_on) * p / panels;
            const double s1 = phi.t_on + (b - phi.t_on) * (p + 1) / panels;
            sum += integrate_gl(integrand, s0, s1, 12);
        }
        psi[k] = sum;
    }
    return psi;
}

} // namespace mixtype
