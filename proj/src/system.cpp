#include "mixtype/system.hpp"

#include "mixtype/errors.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace mixtype {

void apply_div(const StaggeredGrid& grid, std::span<const double> w, std::span<double> out) {
    const int n = grid.num_u();
    assert(int(w.size()) == grid.num_w() && int(out.size()) == n);
    const double inv = grid.num_cells; // 1/dx
    for (int i = 0; i < n; ++i) {
        const double left = (i > 0) ? w[i - 1] : 0.0;
        const double right = (i < n - 1) ? w[i] : 0.0;
        out[i] = (right - left) * inv;
    }
}

void apply_grad(const StaggeredGrid& grid, std::span<const double> u, std::span<double> out) {
    const int m = grid.num_w();
    assert(int(u.size()) == grid.num_u() && int(out.size()) == m);
    const double inv = grid.num_cells;
    for (int j = 0; j < m; ++j)
        out[j] = (u[j + 1] - u[j]) * inv;
}

void SkewOperator::apply(std::span<const double> v, std::span<double> out) const {
    const int nu = grid.num_u();
    const int nw = grid.num_w();
    assert(int(v.size()) == grid.dim() && int(out.size()) == grid.dim());
    apply_div(grid, v.subspan(nu, nw), out.subspan(0, nu));
    apply_grad(grid, v.subspan(0, nu), out.subspan(nu, nw));
    for (int i = 0; i < grid.dim(); ++i)
        out[i] = -out[i];
}

DiscreteSystem assemble_system(const ProblemKind& kind, const MaterialLayout& layout,
                               const StaggeredGrid& grid) {
    const CoefficientField c = sample_coefficients(layout, grid, kind);
    DiscreteSystem sys{grid, kind, layout, {}, {}};
    sys.m_diag.reserve(grid.dim());
    sys.n_diag.reserve(grid.dim());
    sys.m_diag.insert(sys.m_diag.end(), c.m_u.begin(), c.m_u.end());
    sys.m_diag.insert(sys.m_diag.end(), c.m_w.begin(), c.m_w.end());
    sys.n_diag.insert(sys.n_diag.end(), c.n_u.begin(), c.n_u.end());
    sys.n_diag.insert(sys.n_diag.end(), c.n_w.begin(), c.n_w.end());
    return sys;
}

double solvability_constant(const DiscreteSystem& system, double nu) {
    if (!(nu > 0.0))
        throw std::domain_error("solvability_constant: nu must be positive");
    double c = nu * system.m_diag[0] + system.n_diag[0];
    for (std::size_t i = 1; i < system.m_diag.size(); ++i)
        c = std::min(c, nu * system.m_diag[i] + system.n_diag[i]);
    return c;
}

} // namespace mixtype
