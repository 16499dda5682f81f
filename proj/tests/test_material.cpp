#include <catch2/catch_amalgamated.hpp>

#include "mixtype/errors.hpp"
#include "mixtype/material.hpp"

#include "test_oracles.hpp"

using namespace mixtype;
using Catch::Approx;

namespace {
MaterialLayout he_layout(int n, double duty = 0.5) {
    return MaterialLayout{n, duty, ProblemFamily::HyperbolicElliptic};
}
} // namespace

TEST_CASE("indicator reproduces the periodic half-open cells") {
    CHECK(indicator(0.1, he_layout(1)) == 1.0);
    CHECK(indicator(0.5, he_layout(1)) == 0.0); // half-open at the phase change
    CHECK(indicator(0.3, he_layout(2)) == 0.0); // frac(0.6) = 0.6 is elliptic

    // against the direct cell enumeration, away from the junctions
    for (int n : {1, 2, 3, 5, 8}) {
        for (int i = 0; i < 200; ++i) {
            const double x = (i + 0.5) / 200.0;
            bool on_junction = false;
            for (double xi : junction_points(he_layout(n)))
                if (std::abs(x - xi) < 1e-9)
                    on_junction = true;
            if (on_junction)
                continue;
            const bool expect = oracle::in_hyperbolic_cell(x, n, 0.5) || x < 1e-9;
            CHECK(indicator(x, he_layout(n)) == (expect ? 1.0 : 0.0));
        }
    }
}

TEST_CASE("indicator domain and layout validation") {
    CHECK_THROWS_AS(indicator(-0.01, he_layout(1)), std::domain_error);
    CHECK_THROWS_AS(indicator(1.01, he_layout(1)), std::domain_error);
    CHECK_THROWS_AS(indicator(0.5, he_layout(0)), std::invalid_argument);
    CHECK_THROWS_AS(indicator(0.5, he_layout(2, 1.0)), std::invalid_argument);
    CHECK(indicator(0.0, he_layout(3)) == 1.0);
    CHECK(indicator(1.0, he_layout(3)) == 1.0); // frac(3.0) = 0: period start
}

TEST_CASE("weak-* mean is the duty cycle, independent of n") {
    CHECK(weak_star_mean(he_layout(1)) == 0.5);
    CHECK(weak_star_mean(he_layout(7, 0.25)) == 0.25);
    CHECK(weak_star_mean(he_layout(3, 0.9)) == 0.9);

    // mean of a(n.) over [0,1] equals duty for every n (quadrature check)
    for (int n : {1, 2, 4, 9}) {
        const auto layout = he_layout(n);
        const double mean = oracle::trapezoid(
            [&](double x) { return indicator(std::min(x, 1.0), layout); }, 0.0, 1.0, 200000);
        CHECK(mean == Approx(0.5).margin(1e-4));
    }
}

TEST_CASE("junction points enumerate phase changes and period boundaries") {
    const auto pts = junction_points(he_layout(2));
    REQUIRE(pts.size() == 3);
    CHECK(pts[0] == Approx(0.25));
    CHECK(pts[1] == Approx(0.5));
    CHECK(pts[2] == Approx(0.75));
}

TEST_CASE("coefficient sampling on the fine hyperbolic-elliptic layout") {
    const StaggeredGrid grid = build_grid(4);
    const auto c = sample_coefficients(he_layout(1), grid, ProblemKind::fine_he(1));

    CHECK(c.m_u == std::vector<double>{1, 1, 0, 0});
    CHECK(c.m_w == std::vector<double>{1, 0, 0}); // nodes 0.25, 0.5, 0.75
    for (std::size_t i = 0; i < c.m_u.size(); ++i)
        CHECK(c.m_u[i] + c.n_u[i] == 1.0);
    for (std::size_t j = 0; j < c.m_w.size(); ++j)
        CHECK(c.m_w[j] + c.n_w[j] == 1.0);
}

TEST_CASE("coefficient sampling for the limit and degenerate kinds") {
    const StaggeredGrid grid = build_grid(6);
    const MaterialLayout layout = he_layout(1);

    const auto he = sample_coefficients(layout, grid, ProblemKind::limit_he());
    for (double v : he.m_u)
        CHECK(v == 0.5);
    for (double v : he.n_w)
        CHECK(v == 0.5);

    const auto hp = sample_coefficients(layout, grid, ProblemKind::limit_hp());
    for (double v : hp.m_u)
        CHECK(v == 1.0);
    for (double v : hp.n_u)
        CHECK(v == 0.0);
    for (double v : hp.m_w)
        CHECK(v == 0.5);
    for (double v : hp.n_w)
        CHECK(v == 0.5);

    const auto wave = sample_coefficients(layout, grid, ProblemKind::pure_wave());
    for (double v : wave.m_u)
        CHECK(v == 1.0);
    for (double v : wave.n_w)
        CHECK(v == 0.0);
}

TEST_CASE("fine hyperbolic-parabolic keeps d/dt on the whole u-row") {
    const StaggeredGrid grid = build_grid(8);
    const auto c = sample_coefficients(he_layout(2), grid, ProblemKind::fine_hp(2));
    for (double v : c.m_u)
        CHECK(v == 1.0);
    for (double v : c.n_u)
        CHECK(v == 0.0);
    // w-row alternates with the material: nodes j/8, periods [0,1/2), [1/2,1)
    CHECK(c.m_w == std::vector<double>{1, 0, 0, 1, 1, 0, 0});
}

TEST_CASE("misaligned grids are rejected") {
    CHECK_THROWS_AS(sample_coefficients(he_layout(3), build_grid(16), ProblemKind::fine_he(3)),
                    AlignmentError);
    CHECK_THROWS_AS(sample_coefficients(he_layout(4), build_grid(4), ProblemKind::fine_he(4)),
                    AlignmentError);
    CHECK_NOTHROW(sample_coefficients(he_layout(4), build_grid(8), ProblemKind::fine_he(4)));
}

TEST_CASE("coefficients stay attached to phase regions under refinement") {
    const MaterialLayout layout = he_layout(2);
    const auto coarse = sample_coefficients(layout, build_grid(8), ProblemKind::fine_he(2));
    const auto fine = sample_coefficients(layout, build_grid(16), ProblemKind::fine_he(2));
    for (int i = 0; i < 8; ++i) {
        CHECK(fine.m_u[2 * i] == coarse.m_u[i]);
        CHECK(fine.m_u[2 * i + 1] == coarse.m_u[i]);
    }
}

TEST_CASE("pairing defect: closed forms and decay") {
    // exact mean over whole periods
    CHECK(pairing_defect(he_layout(1), SpatialProfile::constant()) == Approx(0.0).margin(1e-15));
    CHECK(pairing_defect(he_layout(9), SpatialProfile::constant()) == Approx(0.0).margin(1e-15));

    // g(x) = x has defect exactly 1/(8n) at duty 1/2
    CHECK(pairing_defect(he_layout(4), SpatialProfile::linear()) ==
          Approx(1.0 / 32).margin(1e-13));
    CHECK(pairing_defect(he_layout(16), SpatialProfile::linear()) ==
          Approx(1.0 / 128).margin(1e-13));

    // cross-check against the direct half-cell sum
    for (int n : {2, 4, 16}) {
        const double paired = oracle::linear_pairing_closed_form(n);
        const double defect = std::abs(paired - 0.5 * 0.5);
        CHECK(pairing_defect(he_layout(n), SpatialProfile::linear()) ==
              Approx(defect).margin(1e-13));
    }

    // defect -> 0 for the catalogued profiles as n grows (cos(pi x) cancels to
    // the quadrature floor for even n, hence the floor in the comparison)
    for (const auto& g : {SpatialProfile::cosine(1), SpatialProfile::gaussian(0.5, 0.15),
                          SpatialProfile::linear()}) {
        double prev = 1e300;
        for (int n : {4, 16, 64}) {
            const double d = pairing_defect(he_layout(n), g);
            CHECK(d < std::max(prev, 1e-13));
            prev = d;
        }
        CHECK(prev < 5e-3);
    }
}
