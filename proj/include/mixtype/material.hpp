#pragma once

#include "mixtype/grid.hpp"
#include "mixtype/problem_kind.hpp"
#include "mixtype/profiles.hpp"

#include <vector>

namespace mixtype {

/// Periodic two-phase cell structure on [0,1]: n periods, the first `duty`
/// fraction of each period is the hyperbolic phase. duty = 1/2 reproduces the
/// indicator a(nx) with a = sum_k chi_[k,k+1/2).
///
/// Convention: the indicator is half-open per period, 1 on [k, k+duty) and 0 on
/// [k+duty, k+1). Values at phase changes are measure-zero in the continuum;
/// the half-open variant is fixed here for determinism.
struct MaterialLayout {
    int n = 1;
    double duty = 0.5;
    ProblemFamily family = ProblemFamily::HyperbolicElliptic;
};

/// Diagonals of M and N evaluated at every degree of freedom.
struct CoefficientField {
    std::vector<double> m_u, n_u; // one per u-dof
    std::vector<double> m_w, n_w; // one per w-dof
};

/// Indicator of the hyperbolic phase at x (domain [0,1]). Positions within
/// 1e-12 of a phase change are snapped onto it before classifying.
double indicator(double x, const MaterialLayout& layout);

/// weak-* limit of x -> a(nx): the mean of one period.
double weak_star_mean(const MaterialLayout& layout);

/// All junction x-positions of a layout: phase changes (j-1+duty)/n and
/// interior period boundaries j/n, sorted ascending.
std::vector<double> junction_points(const MaterialLayout& layout);

/// Throws AlignmentError unless every junction of `layout` lies exactly on a
/// node of `grid` (prevents coefficients straddling a cell).
void check_alignment(const MaterialLayout& layout, const StaggeredGrid& grid);

/// M/N diagonals of the catalogued problem `kind` sampled at the dof
/// coordinates of `grid`. Fine-scale kinds classify dofs by exact integer
/// arithmetic on the aligned grid; limit and degenerate kinds fill constants.
CoefficientField sample_coefficients(const MaterialLayout& layout, const StaggeredGrid& grid,
                                     const ProblemKind& kind);

/// | int_0^1 a(nx) g(x) dx - duty * int_0^1 g(x) dx |, with quadrature
/// subdivided at the phase changes (exact per phase for polynomial g).
/// `points_per_piece` Gauss-Legendre nodes are used on each phase interval.
double pairing_defect(const MaterialLayout& layout, const SpatialProfile& g,
                      int points_per_piece = 8);

} // namespace mixtype
