#include <catch2/catch_amalgamated.hpp>

#include "mixtype/analysis.hpp"
#include "mixtype/errors.hpp"
#include "mixtype/problems.hpp"

#include "test_oracles.hpp"

#include <cmath>

using namespace mixtype;
using Catch::Approx;

namespace {

constexpr double kPi = 3.14159265358979323846;

// synthetic field u(t,x) = h(t) * profile(x), w-part = wprofile(x) * h(t)
SpaceTimeField synthetic_field(const StaggeredGrid& grid, const TimeGrid& time,
                               const std::function<double(double)>& h,
                               const std::function<double(double)>& profile,
                               const std::function<double(double)>& wprofile) {
    SpaceTimeField f;
    f.grid = grid;
    f.time = time;
    f.layout = SpaceTimeField::Layout::FullState;
    f.states.assign(time.num_steps() + 1, std::vector<double>(grid.dim(), 0.0));
    for (int k = 0; k <= time.num_steps(); ++k) {
        const double ht = h(time.time(k));
        for (int i = 0; i < grid.num_u(); ++i)
            f.states[k][i] = ht * profile(grid.u_coord(i));
        for (int j = 0; j < grid.num_w(); ++j)
            f.states[k][grid.num_u() + j] = ht * wprofile(grid.w_coord(j));
    }
    return f;
}

} // namespace

TEST_CASE("energy is the M-weighted squared norm") {
    const StaggeredGrid grid = build_grid(4);
    const DiscreteSystem he = make_system(ProblemKind::limit_he(), grid);

    std::vector<double> zero(grid.dim(), 0.0);
    CHECK(energy(he, zero) == 0.0);

    // ||v||^2 dx = 4 with M = I/2 gives energy 1
    std::vector<double> v(grid.dim(), 0.0);
    v[0] = 4.0; // dx * 16 = 4
    CHECK(energy(he, v) == Approx(1.0));

    // states supported on elliptic dofs carry no energy
    const DiscreteSystem fine = make_system(ProblemKind::fine_he(1), grid);
    std::vector<double> elliptic(grid.dim(), 0.0);
    elliptic[2] = 7.0; // m_u[2] = 0
    elliptic[3] = -1.0;
    CHECK(energy(fine, elliptic) == 0.0);
}

TEST_CASE("weighted space-time norm") {
    const StaggeredGrid grid = build_grid(8);
    const TimeGrid time = make_time_grid(0.0, 10.0, 1e-3);

    const auto zero = synthetic_field(grid, time, [](double) { return 0.0; },
                                      [](double) { return 1.0; }, [](double) { return 0.0; });
    CHECK(weighted_space_time_norm(zero, 0.7) == 0.0);

    // constant-in-time field c on [0, T] at nu = 0 has norm c sqrt(T)
    const double c = 2.5;
    const auto flat = synthetic_field(grid, time, [&](double) { return c; },
                                      [](double) { return 1.0; }, [](double) { return 0.0; });
    CHECK(weighted_space_time_norm(flat, 0.0) == Approx(c * std::sqrt(10.0)).epsilon(1e-9));

    // e^{-t} profile: integral (1 - e^{-2T})/2
    const auto decaying = synthetic_field(grid, time, [](double t) { return std::exp(-t); },
                                          [](double) { return 1.0; }, [](double) { return 0.0; });
    CHECK(weighted_space_time_norm(decaying, 0.0) ==
          Approx(std::sqrt((1 - std::exp(-20.0)) / 2)).epsilon(1e-6));

    // nonincreasing in nu for fields supported in t >= 0
    double prev = 1e300;
    for (double nu : {-0.5, 0.0, 0.5, 1.0}) {
        const double v = weighted_space_time_norm(decaying, nu);
        CHECK(v <= prev);
        prev = v;
    }
}

TEST_CASE("pairing with test functions") {
    const StaggeredGrid grid = build_grid(32);
    const TimeGrid time = make_time_grid(0.0, 3.0, 1e-3);

    const TestFunction ones{"ones", TimeProfile::poly_bump(-1.0, 4.0, 0), // never used below
                            SpatialProfile::constant(), true};

    const auto zero = synthetic_field(grid, time, [](double) { return 0.0; },
                                      [](double) { return 1.0; }, [](double) { return 0.0; });
    CHECK(pair_with_test_function(zero, ones) == 0.0);

    // field 1 on [0,1]x[0,T] against rho = sigma = 1 integrates to T
    SpaceTimeField flat = synthetic_field(grid, time, [](double) { return 1.0; },
                                          [](double) { return 1.0; }, [](double) { return 0.0; });
    TestFunction unit = ones;
    unit.rho = TimeProfile::gaussian(0.0, 1e12); // effectively 1 on the window
    CHECK(pair_with_test_function(flat, unit) == Approx(3.0).epsilon(1e-9));

    // u = cos(pi x) h(t) against sigma = cos(pi x): the cos^2 mass is exactly
    // 1/2 on the staggered grid, so the pairing is (1/2) int rho h
    const auto h = [](double t) { return std::exp(-t) * (1.0 + 0.3 * std::sin(3 * t)); };
    const auto field = synthetic_field(grid, time, h, [](double x) { return std::cos(kPi * x); },
                                       [](double) { return 0.0; });
    TestFunction cosine{"cos", TimeProfile::gaussian(1.2, 0.4), SpatialProfile::cosine(1), true};
    const double time_part = oracle::trapezoid(
        [&](double t) { return cosine.rho(t) * h(t); }, 0.0, 3.0, 300000);
    // the x-sum is exact (staggered cos^2 mass = 1/2); the t-trapezoid at
    // dt = 1e-3 carries O(dt^2) error
    CHECK(pair_with_test_function(field, cosine) == Approx(0.5 * time_part).epsilon(1e-4));

    // linearity in the field
    const auto f2 = synthetic_field(grid, time, [](double t) { return std::cos(t); },
                                    [](double x) { return x; }, [](double) { return 0.0; });
    SpaceTimeField combo = flat;
    for (int k = 0; k <= time.num_steps(); ++k)
        for (int i = 0; i < grid.dim(); ++i)
            combo.states[k][i] = 2.0 * flat.states[k][i] - 3.0 * f2.states[k][i];
    CHECK(pair_with_test_function(combo, cosine) ==
          Approx(2.0 * pair_with_test_function(flat, cosine) -
                 3.0 * pair_with_test_function(f2, cosine))
              .margin(1e-12));
}

TEST_CASE("decay-rate fits") {
    const TimeGrid time = make_time_grid(0.0, 12.0, 1e-3);
    std::vector<double> ts, exp2, poly, flat;
    for (int k = 0; k <= time.num_steps(); ++k) {
        const double t = time.time(k);
        ts.push_back(t);
        exp2.push_back(std::exp(-2.0 * t));
        poly.push_back((1.0 + t) * std::exp(-t));
        flat.push_back(3.7);
    }

    const auto r1 = fit_decay_rate(ts, exp2, 2.0, 10.0, "energy");
    CHECK(r1.rate == Approx(-2.0).margin(1e-6));
    CHECK(r1.residual < 1e-9);
    CHECK_FALSE(r1.degenerate);

    const auto r2 = fit_decay_rate(ts, poly, 8.0, 12.0, "state-norm");
    CHECK(r2.rate > -1.0);
    CHECK(r2.rate < -0.85);

    const auto r3 = fit_decay_rate(ts, flat, 1.0, 11.0, "spatial-mean");
    CHECK(r3.rate == Approx(0.0).margin(1e-12));

    std::vector<double> touching_zero = exp2;
    touching_zero[7000] = 0.0;
    const auto r4 = fit_decay_rate(ts, touching_zero, 2.0, 10.0, "energy");
    CHECK(r4.degenerate);
    CHECK(r4.rate == 0.0);

    CHECK_THROWS_AS(fit_decay_rate(ts, exp2, 10.0, 14.0, "energy"), std::domain_error);
    CHECK_THROWS_AS(fit_decay_rate(ts, exp2, -2.0, 5.0, "energy"), std::domain_error);
}

TEST_CASE("limit spectra: roots, abscissas, and the discrete symbol") {
    // continuum HE: k = 0 double root at -1, k = 1 pair -1 +- 2 pi i
    const auto he = limit_spectrum(ProblemKind::limit_he(), std::nullopt, 8);
    CHECK(he.abscissa == -1.0);
    CHECK(he.modes[0].lambda1 == std::complex<double>(-1.0, 0.0));
    CHECK(he.modes[1].lambda1.real() == -1.0);
    CHECK(he.modes[1].lambda1.imag() == Approx(6.28318530717958648).epsilon(1e-14));

    // continuum HP: k = 0 roots {0, -1}; abscissa 0
    const auto hp = limit_spectrum(ProblemKind::limit_hp(), std::nullopt, 8);
    CHECK(hp.abscissa == 0.0);
    CHECK(hp.modes[0].lambda1 == std::complex<double>(0.0, 0.0));
    CHECK(hp.modes[0].lambda2 == std::complex<double>(-1.0, 0.0));
    // k = 1: lambda^2 + lambda + 2 pi^2 = 0 => Re = -1/2
    CHECK(hp.modes[1].lambda1.real() == -0.5);

    // discrete HE at N_x = 4: d_1 = 8 sin(pi/8), eigenvalues -1 +- 2 d_1 i
    const auto dhe = limit_spectrum(ProblemKind::limit_he(), build_grid(4), 3);
    CHECK(dhe.abscissa == -1.0);
    CHECK(dhe.modes[1].lambda1.imag() == Approx(6.1229349178414366).epsilon(1e-13));

    // the HE abscissa is -1 for every grid resolution
    for (int nx : {4, 16, 256})
        CHECK(limit_spectrum(ProblemKind::limit_he(), build_grid(nx), nx - 1).abscissa == -1.0);

    CHECK_THROWS_AS(limit_spectrum(ProblemKind::limit_he(), build_grid(4), 4), std::domain_error);
    CHECK_THROWS_AS(limit_spectrum(ProblemKind::pure_wave(), std::nullopt, 2),
                    std::invalid_argument);
}

TEST_CASE("discrete symbol matches the assembled operator on sampled modes") {
    for (const auto& kind : {ProblemKind::limit_he(), ProblemKind::limit_hp()}) {
        const StaggeredGrid grid = build_grid(16);
        const DiscreteSystem sys = make_system(kind, grid);
        const auto spec = limit_spectrum(kind, grid, 3);
        for (int k = 1; k <= 3; ++k) {
            const auto& mode = spec.modes[k];
            const std::complex<double> lambda = mode.lambda1;
            const std::complex<double> alpha = mode.symbol;
            const std::complex<double> beta = lambda * sys.m_diag[0] + sys.n_diag[0];

            std::vector<double> zr(grid.dim()), zi(grid.dim());
            for (int i = 0; i < grid.num_u(); ++i) {
                const double base = std::cos(k * kPi * grid.u_coord(i));
                zr[i] = alpha.real() * base;
                zi[i] = alpha.imag() * base;
            }
            for (int j = 0; j < grid.num_w(); ++j) {
                const double base = std::sin(k * kPi * grid.w_coord(j));
                zr[grid.num_u() + j] = beta.real() * base;
                zi[grid.num_u() + j] = beta.imag() * base;
            }
            std::vector<double> ar(grid.dim()), ai(grid.dim());
            sys.apply_skew(zr, ar);
            sys.apply_skew(zi, ai);
            double resid2 = 0, scale2 = 0;
            for (int i = 0; i < grid.dim(); ++i) {
                const std::complex<double> z{zr[i], zi[i]};
                const std::complex<double> az{ar[i], ai[i]};
                const std::complex<double> r = lambda * sys.m_diag[i] * z + sys.n_diag[i] * z + az;
                resid2 += std::norm(r);
                scale2 += std::norm(az) + std::norm(z);
            }
            CHECK(std::sqrt(resid2 / scale2) < 1e-12);
        }
    }
}

TEST_CASE("junction jump diagnostic") {
    const StaggeredGrid grid = build_grid(8);
    const TimeGrid time = make_time_grid(0.0, 1.0, 0.1);
    const MaterialLayout layout{2, 0.5, ProblemFamily::HyperbolicElliptic};

    // constant solution: no jumps anywhere, degenerate report
    const auto flat = synthetic_field(grid, time, [](double) { return 1.0; },
                                      [](double) { return 1.0; }, [](double) { return 0.0; });
    const auto rep = junction_jump_report(flat, layout);
    CHECK(rep.degenerate);
    CHECK(rep.indicator == 0.0);

    // a jump across a junction node towers above the smooth background slope
    auto kinked = synthetic_field(grid, time, [](double) { return 1.0; },
                                  [](double x) { return (x < 0.25 ? 1.0 : 0.0) + 0.1 * x; },
                                  [](double) { return 0.0; });
    const auto rep2 = junction_jump_report(kinked, layout);
    CHECK_FALSE(rep2.degenerate);
    CHECK(rep2.indicator > 1.0); // O(1) against the 0.1-slope background

    // smooth fine-scale solutions: indicator decreases under refinement
    const ForcingSpec forcing{BumpPhi{0.3, 1.0, 1.0, 3}, SpatialProfile::gaussian(0.4, 0.15)};
    double prev = 2.0;
    for (int nx : {16, 32, 64}) {
        const StaggeredGrid g = build_grid(nx);
        const TimeGrid t = make_time_grid(0.0, 2.0, 2e-3);
        const auto field = solve_evolution(make_system(ProblemKind::fine_he(2), g), forcing, t, 1.0);
        const auto r = junction_jump_report(field, layout);
        CHECK_FALSE(r.degenerate);
        CHECK(r.indicator < prev);
        prev = r.indicator;
    }
    CHECK(prev < 0.5);
}

TEST_CASE("weak convergence report plumbing") {
    const StaggeredGrid grid = build_grid(8);
    const TimeGrid time = make_time_grid(0.0, 2.0, 0.01);
    const auto field = synthetic_field(grid, time, [](double t) { return std::sin(t); },
                                       [](double x) { return 1.0 + x; },
                                       [](double) { return 0.0; });
    const auto tests = default_test_set();
    REQUIRE(tests.size() == 10);

    // compared with itself: all errors vanish
    const auto rep = weak_convergence_report({{4, &field}, {8, &field}}, field, tests);
    REQUIRE(rep.rows.size() == 2 * tests.size());
    for (const auto& row : rep.rows)
        CHECK(row.abs_error == 0.0);

    // single-element sweeps leave the order column empty
    const auto rep1 = weak_convergence_from_pairings({{4, std::vector<double>(tests.size(), 1.0)}},
                                                     std::vector<double>(tests.size(), 0.5), tests);
    for (const auto& row : rep1.rows)
        CHECK_FALSE(row.empirical_order.has_value());

    // doubling n with halving errors reports order 1
    std::vector<std::pair<int, std::vector<double>>> fp{
        {4, std::vector<double>(tests.size(), 1.5)},
        {8, std::vector<double>(tests.size(), 1.0)},
    };
    const auto rep2 =
        weak_convergence_from_pairings(fp, std::vector<double>(tests.size(), 0.5), tests);
    for (std::size_t i = tests.size(); i < rep2.rows.size(); ++i)
        CHECK(rep2.rows[i].empirical_order.value() == Approx(1.0));

    // mismatched time grids are not comparable
    const TimeGrid other = make_time_grid(0.0, 2.0, 0.02);
    const auto coarse = synthetic_field(grid, other, [](double) { return 1.0; },
                                        [](double) { return 1.0; }, [](double) { return 0.0; });
    CHECK_THROWS_AS(weak_convergence_report({{4, &coarse}}, field, tests), ComparabilityError);
}
