#include "mixtype/material.hpp"

#include "mixtype/errors.hpp"
#include "mixtype/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mixtype {

namespace {

void validate_layout(const MaterialLayout& layout) {
    if (layout.n < 1)
        throw std::invalid_argument("material layout: n must be >= 1");
    if (!(layout.duty > 0.0 && layout.duty < 1.0))
        throw std::invalid_argument("material layout: duty must lie in (0,1)");
}

// Half-open phase classification of the fractional period coordinate y in
// [0,1): hyperbolic iff y in [0, duty). Snap within 1e-12 of the boundaries so
// junction samples do not flip on rounding of n*x.
bool hyperbolic_phase(double y, double duty) {
    constexpr double snap = 1e-12;
    if (y < snap || y > 1.0 - snap)
        return true; // period start
    if (std::abs(y - duty) < snap)
        return false; // phase change: elliptic side by the half-open convention
    return y < duty;
}

} // namespace

double indicator(double x, const MaterialLayout& layout) {
    validate_layout(layout);
    if (!(x >= 0.0 && x <= 1.0))
        throw std::domain_error("indicator: x = " + std::to_string(x) + " outside [0,1]");
    double y = layout.n * x;
    y -= std::floor(y);
    return hyperbolic_phase(y, layout.duty) ? 1.0 : 0.0;
}

double weak_star_mean(const MaterialLayout& layout) {
    validate_layout(layout);
    return layout.duty;
}

std::vector<double> junction_points(const MaterialLayout& layout) {
    validate_layout(layout);
    std::vector<double> pts;
    pts.reserve(2 * layout.n - 1);
    for (int j = 1; j <= layout.n; ++j)
        pts.push_back((j - 1 + layout.duty) / layout.n);
    for (int j = 1; j < layout.n; ++j)
        pts.push_back(double(j) / layout.n);
    std::sort(pts.begin(), pts.end());
    return pts;
}

void check_alignment(const MaterialLayout& layout, const StaggeredGrid& grid) {
    validate_layout(layout);
    const int nx = grid.num_cells;
    if (nx % layout.n != 0)
        throw AlignmentError("grid misaligned: N_x = " + std::to_string(nx) +
                             " is not a multiple of n = " + std::to_string(layout.n));
    for (double xi : junction_points(layout)) {
        const double pos = xi * nx;
        if (std::abs(pos - std::round(pos)) > 1e-9)
            throw AlignmentError("grid misaligned: junction at x = " + std::to_string(xi) +
                                 " does not fall on a node of N_x = " + std::to_string(nx) +
                                 " (for duty 1/2, N_x must be a multiple of 2n)");
    }
}

CoefficientField sample_coefficients(const MaterialLayout& layout, const StaggeredGrid& grid,
                                     const ProblemKind& kind) {
    validate_layout(layout);
    const int nu = grid.num_u();
    const int nw = grid.num_w();
    CoefficientField c;
    c.m_u.assign(nu, 0.0);
    c.n_u.assign(nu, 0.0);
    c.m_w.assign(nw, 0.0);
    c.n_w.assign(nw, 0.0);

    auto fill_const = [&](double mu, double nu_, double mw, double nw_) {
        std::fill(c.m_u.begin(), c.m_u.end(), mu);
        std::fill(c.n_u.begin(), c.n_u.end(), nu_);
        std::fill(c.m_w.begin(), c.m_w.end(), mw);
        std::fill(c.n_w.begin(), c.n_w.end(), nw_);
    };

    switch (kind.tag) {
    case ProblemTag::LimitHE: fill_const(0.5, 0.5, 0.5, 0.5); return c;
    case ProblemTag::LimitHP: fill_const(1.0, 0.0, 0.5, 0.5); return c;
    case ProblemTag::PureWave: fill_const(1.0, 0.0, 1.0, 0.0); return c;
    case ProblemTag::PureElliptic: fill_const(0.0, 1.0, 0.0, 1.0); return c;
    case ProblemTag::PureParabolic: fill_const(1.0, 0.0, 0.0, 1.0); return c;
    case ProblemTag::FineHE:
    case ProblemTag::FineHP: break;
    }

    if (kind.n != layout.n)
        throw std::invalid_argument("sample_coefficients: kind carries n = " +
                                    std::to_string(kind.n) + " but layout has n = " +
                                    std::to_string(layout.n));
    check_alignment(layout, grid);

    // Exact classification on the aligned grid: the fractional period
    // coordinate of a dof is a ratio of integers, so the half-open comparison
    // never sees rounding. u-center i sits at (2i+1)/(2 N_x), node j at
    // (j+1)/N_x.
    const long long n = layout.n;
    const long long nx = grid.num_cells;
    const double duty = layout.duty;
    auto hyper_center = [&](int i) {
        const long long r = (n * (2 * i + 1)) % (2 * nx);
        return double(r) < duty * double(2 * nx);
    };
    auto hyper_node = [&](int j) {
        const long long r = (n * (j + 1)) % nx;
        return double(r) < duty * double(nx);
    };

    const bool parabolic = kind.tag == ProblemTag::FineHP;
    for (int i = 0; i < nu; ++i) {
        const double a = hyper_center(i) ? 1.0 : 0.0;
        if (parabolic) {
            c.m_u[i] = 1.0; // u-row keeps d/dt everywhere in the HP family
            c.n_u[i] = 0.0;
        } else {
            c.m_u[i] = a;
            c.n_u[i] = 1.0 - a;
        }
    }
    for (int j = 0; j < nw; ++j) {
        const double a = hyper_node(j) ? 1.0 : 0.0;
        c.m_w[j] = a;
        c.n_w[j] = 1.0 - a;
    }
    return c;
}

double pairing_defect(const MaterialLayout& layout, const SpatialProfile& g,
                      int points_per_piece) {
    validate_layout(layout);
    // Break [0,1] at every junction; integrate per piece so polynomial g is
    // integrated exactly per phase.
    std::vector<double> breaks{0.0};
    for (double xi : junction_points(layout))
        breaks.push_back(xi);
    breaks.push_back(1.0);

    auto fn = [&](double x) { return g(x); };
    double paired = 0.0; // int a(nx) g
    double total = 0.0;  // int g
    for (std::size_t p = 0; p + 1 < breaks.size(); ++p) {
        const double a = breaks[p], b = breaks[p + 1];
        if (b - a < 1e-15)
            continue;
        const double piece = integrate_gl(fn, a, b, points_per_piece);
        total += piece;
        if (indicator(0.5 * (a + b), layout) > 0.5)
            paired += piece;
    }
    return std::abs(paired - layout.duty * total);
}

} // namespace mixtype
