#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace mixtype {

/// Gauss-Legendre nodes and weights on [-1, 1], computed by Newton iteration
/// on the Legendre recurrence. Deterministic; cached per order.
const std::vector<std::pair<double, double>>& gauss_legendre(int order);

/// Gauss-Legendre quadrature of f over [a, b].
double integrate_gl(const std::function<double(double)>& f, double a, double b, int order);

} // namespace mixtype
