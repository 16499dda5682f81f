#include <catch2/catch_amalgamated.hpp>

#include "mixtype/errors.hpp"
#include "mixtype/problems.hpp"
#include "mixtype/system.hpp"

#include <cmath>
#include <random>

using namespace mixtype;
using Catch::Approx;

namespace {
constexpr double kPi = 3.14159265358979323846;

std::vector<double> random_vec(std::mt19937& gen, int n) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> v(n);
    for (auto& x : v)
        x = dist(gen);
    return v;
}
} // namespace

TEST_CASE("staggered grid layout") {
    const StaggeredGrid g2 = build_grid(2);
    CHECK(g2.u_coord(0) == Approx(0.25));
    CHECK(g2.u_coord(1) == Approx(0.75));
    CHECK(g2.w_coord(0) == Approx(0.5));
    CHECK(g2.dim() == 3);

    const StaggeredGrid g4 = build_grid(4);
    CHECK(g4.u_coord(0) == Approx(0.125));
    CHECK(g4.u_coord(3) == Approx(0.875));
    CHECK(g4.w_coord(0) == Approx(0.25));
    CHECK(g4.w_coord(2) == Approx(0.75));

    const StaggeredGrid g100 = build_grid(100);
    CHECK(g100.dx() == Approx(0.01));
    CHECK(g100.dim() == 199);

    CHECK_THROWS_AS(build_grid(1), std::invalid_argument);
    CHECK_THROWS_AS(build_grid(0), std::invalid_argument);
}

TEST_CASE("divergence and gradient stencils on the smallest grid") {
    const StaggeredGrid grid = build_grid(2);
    std::vector<double> u{1.0, 3.0}, w{2.0};
    std::vector<double> gu(1), dw(2);
    apply_grad(grid, u, gu);
    apply_div(grid, w, dw);
    CHECK(gu[0] == Approx((3.0 - 1.0) / 0.5));
    CHECK(dw[0] == Approx(2.0 / 0.5));
    CHECK(dw[1] == Approx(-2.0 / 0.5));
}

TEST_CASE("skew-symmetry and discrete adjointness over random vectors") {
    std::mt19937 gen(991);
    for (int nx : {2, 5, 16, 256}) {
        const StaggeredGrid grid = build_grid(nx);
        const SkewOperator a = build_skew_operator(grid);
        std::vector<double> av(grid.dim()), du(grid.num_u()), gw(grid.num_w());
        for (int trial = 0; trial < 50; ++trial) {
            const auto v = random_vec(gen, grid.dim());
            a.apply(v, av);
            double skew = 0, norm2 = 0;
            for (int i = 0; i < grid.dim(); ++i) {
                skew += av[i] * v[i];
                norm2 += v[i] * v[i];
            }
            CHECK(std::abs(skew) / norm2 < 1e-12);

            const auto u = std::span<const double>(v).subspan(0, grid.num_u());
            const auto w = std::span<const double>(v).subspan(grid.num_u(), grid.num_w());
            apply_div(grid, w, du);
            apply_grad(grid, u, gw);
            double adj = 0;
            for (int i = 0; i < grid.num_u(); ++i)
                adj += du[i] * u[i];
            for (int j = 0; j < grid.num_w(); ++j)
                adj += gw[j] * w[j];
            CHECK(std::abs(adj) / norm2 < 1e-12);
        }
    }
}

TEST_CASE("staggered difference of a cosine mode is an exact sine mode") {
    const StaggeredGrid grid = build_grid(4);
    const int k = 1;
    const double dk = 2.0 / grid.dx() * std::sin(k * kPi * grid.dx() / 2.0); // 8 sin(pi/8)
    CHECK(dk == Approx(3.0614674589207183).epsilon(1e-14));

    std::vector<double> u(grid.num_u()), gu(grid.num_w());
    for (int i = 0; i < grid.num_u(); ++i)
        u[i] = std::cos(k * kPi * grid.u_coord(i));
    apply_grad(grid, u, gu);
    for (int j = 0; j < grid.num_w(); ++j)
        CHECK(gu[j] == Approx(-dk * std::sin(k * kPi * grid.w_coord(j))).margin(1e-13));
}

TEST_CASE("cosine modes are exact eigenvectors of D o G") {
    for (int nx : {4, 8, 32}) {
        const StaggeredGrid grid = build_grid(nx);
        for (int k = 0; k < nx; ++k) {
            const double dk = 2.0 / grid.dx() * std::sin(k * kPi * grid.dx() / 2.0);
            std::vector<double> u(grid.num_u()), gu(grid.num_w()), dgu(grid.num_u());
            for (int i = 0; i < grid.num_u(); ++i)
                u[i] = std::cos(k * kPi * grid.u_coord(i));
            apply_grad(grid, u, gu);
            apply_div(grid, gu, dgu);
            for (int i = 0; i < grid.num_u(); ++i)
                CHECK(dgu[i] == Approx(-dk * dk * u[i]).margin(1e-9 * (1 + dk * dk)));
        }
    }
}

TEST_CASE("system assembly per problem kind") {
    const StaggeredGrid grid = build_grid(4);
    const MaterialLayout layout{1, 0.5, ProblemFamily::HyperbolicElliptic};

    const DiscreteSystem lim = assemble_system(ProblemKind::limit_he(), layout, grid);
    REQUIRE(int(lim.m_diag.size()) == 7);
    for (double v : lim.m_diag)
        CHECK(v == 0.5);
    for (double v : lim.n_diag)
        CHECK(v == 0.5);

    const DiscreteSystem fine = assemble_system(ProblemKind::fine_he(1), layout, grid);
    CHECK(fine.m_diag == std::vector<double>{1, 1, 0, 0, 1, 0, 0});
    for (std::size_t i = 0; i < fine.m_diag.size(); ++i)
        CHECK(fine.m_diag[i] + fine.n_diag[i] == 1.0);

    const DiscreteSystem wave = assemble_system(ProblemKind::pure_wave(), layout, grid);
    for (double v : wave.m_diag)
        CHECK(v == 1.0);
    for (double v : wave.n_diag)
        CHECK(v == 0.0);

    CHECK_THROWS_AS(assemble_system(ProblemKind::fine_he(3), MaterialLayout{3}, grid),
                    AlignmentError);
}

TEST_CASE("solvability constants") {
    const StaggeredGrid grid = build_grid(8);
    const DiscreteSystem he = make_system(ProblemKind::fine_he(2), grid);
    CHECK(solvability_constant(he, 2.0) == 1.0);
    CHECK(solvability_constant(he, 0.5) == 0.5);
    CHECK(solvability_constant(he, 1.0) == 1.0);

    const DiscreteSystem hp = make_system(ProblemKind::limit_hp(), grid);
    CHECK(solvability_constant(hp, 1.0) == 1.0);

    // min{1, nu} for every fine catalogued system and every nu > 0
    for (double nu : {0.1, 0.7, 1.0, 3.0, 10.0}) {
        for (const auto& kind : {ProblemKind::fine_he(2), ProblemKind::fine_hp(2)}) {
            const DiscreteSystem sys = make_system(kind, grid);
            CHECK(solvability_constant(sys, nu) == std::min(1.0, nu));
        }
    }

    CHECK_THROWS_AS(solvability_constant(he, 0.0), std::domain_error);
    CHECK_THROWS_AS(solvability_constant(he, -1.0), std::domain_error);
}
