#pragma once

#include "mixtype/integrator.hpp"
#include "mixtype/system.hpp"

#include <vector>

namespace mixtype {

/// Assemble the catalogued system `kind` on `grid` (duty 1/2 for fine kinds).
DiscreteSystem make_system(const ProblemKind& kind, const StaggeredGrid& grid);

/// Options for the explicit second-order oracle. `substeps` refines the
/// internal march (output stays on the caller's time grid); the explicit
/// stability limit dt <= dx/2 (LimitHE, wave speed 2) resp. dt <= dx/sqrt(2)
/// (LimitHP) applies to the internal step.
struct SecondOrderOptions {
    int substeps = 1;
};

/// Independent oracle for the limit equations in second-order form:
/// central differences in time, 3-point ghost-cell Neumann Laplacian on u at
/// cell centers, zero initial data u^0 = u^1 = 0. Returns a u-only field.
/// Throws StabilityError if the internal step violates the explicit limit or
/// the march blows up.
SpaceTimeField solve_second_order_limit(const ProblemKind& kind, const ForcingSpec& forcing,
                                        const StaggeredGrid& grid, const TimeGrid& time,
                                        const SecondOrderOptions& opts = {});

/// Scalar oracle for the spatially constant mode psi(t) under f = phi(t)*1:
///  - LimitHP: psi' = phi, so psi(t) = int phi (closed form; eventually constant).
///  - LimitHE: (d/dt + 1)^2 psi = 2(phi + phi'), evaluated by Gauss-Legendre
///    quadrature of the variation-of-constants kernel r e^{-r}.
/// Returns psi at every grid time.
std::vector<double> analytic_constant_mode(const ProblemKind& kind, const BumpPhi& phi,
                                           const TimeGrid& time);

} // namespace mixtype
