#pragma once

#include "mixtype/grid.hpp"
#include "mixtype/material.hpp"
#include "mixtype/problem_kind.hpp"

#include <span>
#include <vector>

namespace mixtype {

// Discrete derivative pair on the staggered grid. G maps centers to interior
// nodes, D maps node fluxes back to centers with w = 0 at both boundary nodes;
// D = -G^T holds exactly, which is what makes the block operator skew.

/// (D w)_i = (w_i - w_{i-1}) / dx with w_0 = w_{N} = 0; out has num_u entries.
void apply_div(const StaggeredGrid& grid, std::span<const double> w, std::span<double> out);

/// (G u)_j = (u_{j+1} - u_j) / dx at interior nodes; out has num_w entries.
void apply_grad(const StaggeredGrid& grid, std::span<const double> u, std::span<double> out);

/// The block operator A = -[[0, D], [G, 0]] on the stacked state (u | w).
/// A is exactly skew-symmetric: <Av, v> = 0 up to rounding.
struct SkewOperator {
    StaggeredGrid grid;

    void apply(std::span<const double> v, std::span<double> out) const;
};

inline SkewOperator build_skew_operator(const StaggeredGrid& grid) { return SkewOperator{grid}; }

/// The assembled discrete evolution operator data for d/dt(M v) + N v + A v = F:
/// diagonal M and N on the stacked (u | w) vector plus the skew stencil.
/// Immutable after assembly; shareable across concurrent solves.
struct DiscreteSystem {
    StaggeredGrid grid;
    ProblemKind kind;
    MaterialLayout layout; // meaningful for fine-scale kinds only
    std::vector<double> m_diag, n_diag;

    void apply_skew(std::span<const double> v, std::span<double> out) const {
        SkewOperator{grid}.apply(v, out);
    }
};

/// Assemble M, N, A for `kind`; fine kinds require junction alignment.
DiscreteSystem assemble_system(const ProblemKind& kind, const MaterialLayout& layout,
                               const StaggeredGrid& grid);

/// c = min over dofs of (nu * m + n), the constant in the solvability
/// condition nu<Mv,v> + <Nv,v> >= c<v,v>. nu must be positive.
double solvability_constant(const DiscreteSystem& system, double nu);

} // namespace mixtype
