#include "mixtype/runner.hpp"

#include "mixtype/csvio.hpp"
#include "mixtype/errors.hpp"
#include "mixtype/problems.hpp"
#include "mixtype/svg.hpp"
#include "mixtype/version.hpp"

#include "json.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>

namespace mixtype {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

double now_ms() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch()).count();
}

ForcingSpec forcing_from(const ExperimentConfig& cfg) {
    ForcingSpec f;
    f.phi = BumpPhi{cfg.forcing_t_on, cfg.forcing_t_off, cfg.forcing_amp, cfg.forcing_power};
    f.profile = cfg.forcing_profile;
    return f;
}

std::string out_path(const ExperimentConfig& cfg, const std::string& name) {
    fs::create_directories(cfg.out_dir);
    return (fs::path(cfg.out_dir) / name).string();
}

void write_json(const std::string& path, const json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    out << j.dump(2) << "\n";
}

struct Traces {
    std::vector<double> t, energy, norm, mean;
};

Traces compute_traces(const DiscreteSystem& system, const SpaceTimeField& field) {
    Traces tr;
    const int steps = field.time.num_steps();
    tr.t.reserve(steps + 1);
    for (int k = 0; k <= steps; ++k) {
        tr.t.push_back(field.time.time(k));
        tr.energy.push_back(energy(system, field.states[k]));
        tr.norm.push_back(state_norm(field.grid, field.states[k]));
        tr.mean.push_back(spatial_mean_u(field.grid, field.states[k]));
    }
    return tr;
}

void write_manifest(const std::string& path, const RunManifest& m) {
    json j;
    j["tool_version"] = m.tool_version;
    j["config"] = m.config_echo;
    json files = json::object();
    for (const auto& [name, sum] : m.file_checksums)
        files[name] = sum;
    j["file_checksums_fnv1a64"] = files;
    json wall = json::object();
    for (const auto& [stage, ms] : m.wall_ms)
        wall[stage] = ms;
    j["wall_ms"] = wall;
    write_json(path, j);
}

} // namespace

SolveResult run_solve(const ExperimentConfig& cfg) {
    const double t0 = now_ms();
    const StaggeredGrid grid = build_grid(cfg.nx);
    const DiscreteSystem system = make_system(cfg.problem, grid);
    const TimeGrid time = make_time_grid(cfg.t_start, cfg.t_end, cfg.dt);
    const double theta = cfg.theta_for(cfg.problem);
    const SpaceTimeField field = solve_evolution(system, forcing_from(cfg), time, theta);
    const double t1 = now_ms();

    SolveResult res;
    res.field_u_path = out_path(cfg, "field_u.csv");
    res.field_w_path = out_path(cfg, "field_w.csv");
    res.traces_path = out_path(cfg, "traces.csv");
    res.manifest_path = out_path(cfg, "manifest.json");

    write_field_csv(res.field_u_path, field, FieldPart::U);
    write_field_csv(res.field_w_path, field, FieldPart::W);

    const Traces tr = compute_traces(system, field);
    std::vector<std::vector<std::string>> rows;
    rows.reserve(tr.t.size());
    for (std::size_t k = 0; k < tr.t.size(); ++k)
        rows.push_back({fmt17(tr.t[k]), fmt17(tr.energy[k]), fmt17(tr.norm[k]), fmt17(tr.mean[k])});
    write_csv(res.traces_path, "t,energy,state_norm,spatial_mean_u", rows);
    const double t2 = now_ms();

    RunManifest manifest;
    manifest.tool_version = kVersion;
    manifest.config_echo = render_config(cfg);
    for (const auto& p : {res.field_u_path, res.field_w_path, res.traces_path})
        manifest.file_checksums.emplace_back(fs::path(p).filename().string(), file_checksum(p));
    manifest.wall_ms.emplace_back("solve", t1 - t0);
    manifest.wall_ms.emplace_back("emit", t2 - t1);
    write_manifest(res.manifest_path, manifest);
    return res;
}

SweepResult run_sweep(const ExperimentConfig& cfg) {
    if (cfg.sweep.empty())
        throw ConfigError("sweep: config has an empty sweep set");

    const ProblemFamily family = cfg.problem.family();
    const StaggeredGrid grid = build_grid(cfg.nx);
    const TimeGrid time = make_time_grid(cfg.t_start, cfg.t_end, cfg.dt);
    const ForcingSpec forcing = forcing_from(cfg);
    const auto tests = default_test_set();

    auto fine_kind = [&](int n) {
        return family == ProblemFamily::HyperbolicElliptic ? ProblemKind::fine_he(n)
                                                           : ProblemKind::fine_hp(n);
    };
    const ProblemKind limit_kind = family == ProblemFamily::HyperbolicElliptic
                                       ? ProblemKind::limit_he()
                                       : ProblemKind::limit_hp();

    auto pair_all = [&](const SpaceTimeField& f) {
        std::vector<double> p(tests.size());
        for (std::size_t i = 0; i < tests.size(); ++i)
            p[i] = pair_with_test_function(f, tests[i]);
        return p;
    };

    // One theta for every solve in the sweep: a fine-vs-limit pairing with
    // mixed integrators picks up an n-independent O(dt) offset that buries
    // the homogenization error for large n.
    const double sweep_theta = cfg.theta ? *cfg.theta : 1.0;

    const DiscreteSystem limit_system = make_system(limit_kind, grid);
    const std::vector<double> limit_pairings =
        pair_all(solve_evolution(limit_system, forcing, time, sweep_theta));

    std::vector<std::pair<int, std::vector<double>>> fine_pairings;
    std::vector<int> sorted = cfg.sweep;
    std::sort(sorted.begin(), sorted.end());
    for (int n : sorted) {
        const ProblemKind kind = fine_kind(n);
        const DiscreteSystem system = make_system(kind, grid);
        const SpaceTimeField field = solve_evolution(system, forcing, time, sweep_theta);
        fine_pairings.emplace_back(n, pair_all(field));
    }

    SweepResult res;
    res.report = weak_convergence_from_pairings(fine_pairings, limit_pairings, tests);
    res.convergence_csv_path = out_path(cfg, "convergence.csv");
    res.convergence_json_path = out_path(cfg, "convergence.json");

    std::vector<std::vector<std::string>> rows;
    for (const auto& row : res.report.rows) {
        rows.push_back({std::to_string(row.n), row.testfn, fmt17(row.pairing_fine),
                        fmt17(row.pairing_limit), fmt17(row.abs_error),
                        row.empirical_order ? fmt17(*row.empirical_order) : ""});
    }
    write_csv(res.convergence_csv_path, "n,testfn,pairing_fine,pairing_limit,abs_error,empirical_order",
              rows);

    json j;
    j["family"] = family == ProblemFamily::HyperbolicElliptic ? "hyperbolic_elliptic"
                                                              : "hyperbolic_parabolic";
    j["nx"] = cfg.nx;
    j["dt"] = cfg.dt;
    j["sweep"] = sorted;
    json jrows = json::array();
    for (const auto& row : res.report.rows) {
        json r;
        r["n"] = row.n;
        r["testfn"] = row.testfn;
        r["smooth"] = row.smooth;
        r["pairing_fine"] = row.pairing_fine;
        r["pairing_limit"] = row.pairing_limit;
        r["abs_error"] = row.abs_error;
        if (row.empirical_order)
            r["empirical_order"] = *row.empirical_order;
        else
            r["empirical_order"] = nullptr;
        jrows.push_back(r);
    }
    j["rows"] = jrows;
    write_json(res.convergence_json_path, j);
    return res;
}

StabilityResult run_stability(const ExperimentConfig& cfg) {
    switch (cfg.problem.tag) {
    case ProblemTag::LimitHE:
    case ProblemTag::LimitHP:
    case ProblemTag::FineHE:
    case ProblemTag::FineHP:
        break;
    default:
        throw ConfigError("stability: problem must be limit_he, limit_hp, fine_he or fine_hp");
    }

    const StaggeredGrid grid = build_grid(cfg.nx);
    const DiscreteSystem system = make_system(cfg.problem, grid);
    const TimeGrid time = make_time_grid(cfg.t_start, cfg.t_end, cfg.dt);
    const SpaceTimeField field =
        solve_evolution(system, forcing_from(cfg), time, cfg.theta_for(cfg.problem));
    const Traces tr = compute_traces(system, field);

    // fit window: last third of the post-forcing interval
    const double t1 = cfg.forcing_t_off + 2.0 / 3.0 * (cfg.t_end - cfg.forcing_t_off);
    const double t2 = cfg.t_end;

    StabilityResult res;
    res.energy_fit = fit_decay_rate(tr.t, tr.energy, t1, t2, "energy");
    std::vector<double> abs_mean(tr.mean.size());
    for (std::size_t i = 0; i < tr.mean.size(); ++i)
        abs_mean[i] = std::abs(tr.mean[i]);
    res.mean_fit = fit_decay_rate(tr.t, abs_mean, t1, t2, "spatial-mean");

    double tail_mean = 0.0;
    int count = 0;
    for (std::size_t k = 0; k < tr.t.size(); ++k) {
        if (tr.t[k] >= t1) {
            tail_mean += tr.mean[k];
            ++count;
        }
    }
    tail_mean = count ? tail_mean / count : 0.0;

    char buf[64];
    if (!res.energy_fit.degenerate && res.energy_fit.rate <= -0.1 &&
        res.energy_fit.residual <= 0.5) {
        std::snprintf(buf, sizeof buf, "stable (rate %.4g)", res.energy_fit.rate);
        res.verdict = buf;
    } else if (!res.mean_fit.degenerate && std::abs(res.mean_fit.rate) <= 1e-3 &&
               std::abs(tail_mean) > 1e-8) {
        std::snprintf(buf, sizeof buf, "non-stable (persistent mode, value %.6g)", tail_mean);
        res.verdict = buf;
        res.persistent_value = tail_mean;
    } else {
        res.verdict = "inconclusive";
    }

    for (double nu : cfg.nu_list)
        res.weighted_norms[nu] = weighted_space_time_norm(field, nu);

    res.stability_json_path = out_path(cfg, "stability.json");
    res.svg_path = out_path(cfg, "decay.svg");

    json j;
    j["rate"] = res.energy_fit.rate;
    j["residual"] = res.energy_fit.residual;
    j["window"] = {t1, t2};
    j["verdict"] = res.verdict;
    json norms = json::object();
    for (const auto& [nu, v] : res.weighted_norms)
        norms[fmt17(nu)] = v;
    j["weighted_norms"] = norms;
    if (res.persistent_value)
        j["persistent_value"] = *res.persistent_value;
    else
        j["persistent_value"] = nullptr;
    write_json(res.stability_json_path, j);

    PlotSeries energy_series;
    energy_series.label = "log10 energy";
    for (std::size_t k = 0; k < tr.t.size(); ++k) {
        energy_series.x.push_back(tr.t[k]);
        energy_series.y.push_back(tr.energy[k] > 0 ? std::log10(tr.energy[k])
                                                   : std::numeric_limits<double>::quiet_NaN());
    }
    PlotSeries fit_series;
    fit_series.label = "fit";
    fit_series.color = "#c23b22";
    fit_series.dashed = true;
    if (!res.energy_fit.degenerate) {
        const double ln10 = std::log(10.0);
        for (double t : {t1, t2}) {
            fit_series.x.push_back(t);
            fit_series.y.push_back((res.energy_fit.intercept + res.energy_fit.rate * t) / ln10);
        }
    }
    write_svg_plot(res.svg_path, "post-forcing energy decay (" + cfg.problem.name() + ")", "t",
                   "log10 E", {energy_series, fit_series});
    return res;
}

SpectrumResult run_spectrum(const ExperimentConfig& cfg, int k_max) {
    const ProblemKind kind = cfg.problem.family() == ProblemFamily::HyperbolicElliptic
                                 ? ProblemKind::limit_he()
                                 : ProblemKind::limit_hp();
    const StaggeredGrid grid = build_grid(cfg.nx);
    if (k_max < 0)
        k_max = std::min(cfg.nx - 1, 32);

    SpectrumResult res;
    res.discrete = limit_spectrum(kind, grid, k_max);
    res.continuum = limit_spectrum(kind, std::nullopt, k_max);
    res.spectrum_json_path = out_path(cfg, "spectrum.json");

    json j;
    j["kind"] = kind.name();
    j["nx"] = cfg.nx;
    j["k_max"] = k_max;
    j["abscissa_discrete"] = res.discrete.abscissa;
    j["abscissa_continuum"] = res.continuum.abscissa;
    json modes = json::array();
    for (int k = 0; k <= k_max; ++k) {
        const auto& md = res.discrete.modes[k];
        const auto& mc = res.continuum.modes[k];
        json m;
        m["k"] = k;
        m["symbol_discrete"] = md.symbol;
        m["symbol_continuum"] = mc.symbol;
        m["lambda_discrete"] = {{"re", md.lambda1.real()}, {"im", md.lambda1.imag()},
                                {"re2", md.lambda2.real()}, {"im2", md.lambda2.imag()}};
        m["lambda_continuum"] = {{"re", mc.lambda1.real()}, {"im", mc.lambda1.imag()},
                                 {"re2", mc.lambda2.real()}, {"im2", mc.lambda2.imag()}};
        modes.push_back(m);
    }
    j["modes"] = modes;
    write_json(res.spectrum_json_path, j);
    return res;
}

MeanCheckResult run_mean_check(const ExperimentConfig& cfg) {
    std::vector<int> ns = cfg.sweep;
    if (ns.empty())
        ns = {4, 16, 64};
    std::sort(ns.begin(), ns.end());

    struct Probe {
        SpatialProfile g;
        // closed-form defect for duty 1/2, when one exists
        std::function<double(int)> reference;
    };
    const std::vector<Probe> probes = {
        {SpatialProfile::constant(), [](int) { return 0.0; }},
        {SpatialProfile::linear(), [](int n) { return 1.0 / (8.0 * n); }},
        {SpatialProfile::cosine(2), nullptr},
        {SpatialProfile::gaussian(0.5, 0.15), nullptr},
    };

    MeanCheckResult res;
    res.all_pass = true;
    std::vector<std::vector<std::string>> rows;
    for (int n : ns) {
        MaterialLayout layout{n, 0.5, cfg.problem.family()};
        for (const auto& probe : probes) {
            const double defect = pairing_defect(layout, probe.g);
            std::string ref_cell, pass_cell = "";
            if (probe.reference) {
                const double ref = probe.reference(n);
                ref_cell = fmt17(ref);
                const bool ok = std::abs(defect - ref) <= 1e-12;
                pass_cell = ok ? "pass" : "FAIL";
                if (!ok)
                    res.all_pass = false;
            }
            rows.push_back({std::to_string(n), probe.g.name(), fmt17(defect), ref_cell, pass_cell});
        }
    }
    res.csv_path = out_path(cfg, "mean_check.csv");
    write_csv(res.csv_path, "n,profile,defect,closed_form,check", rows);
    return res;
}

namespace {

struct Rng {
    std::mt19937 gen{123457};
    std::uniform_real_distribution<double> dist{-1.0, 1.0};
    double operator()() { return dist(gen); }
    std::vector<double> vec(int n) {
        std::vector<double> v(n);
        for (auto& x : v)
            x = (*this)();
        return v;
    }
};

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

} // namespace

ValidationResult run_validate(const ExperimentConfig& cfg) {
    ValidationResult res;
    auto push = [&](const std::string& id, bool pass, const std::string& detail) {
        res.items.push_back({id, pass, detail});
    };
    Rng rng;

    // 1+2: skew-symmetry and adjointness over random vectors
    {
        double worst_skew = 0, worst_adj = 0;
        for (int nx : {16, cfg.nx}) {
            const StaggeredGrid grid = build_grid(nx);
            const SkewOperator a = build_skew_operator(grid);
            std::vector<double> v(grid.dim()), av(grid.dim());
            std::vector<double> du(grid.num_u()), gw(grid.num_w());
            for (int trial = 0; trial < 100; ++trial) {
                v = rng.vec(grid.dim());
                a.apply(v, av);
                worst_skew = std::max(worst_skew, std::abs(dot(av, v)) / dot(v, v));

                auto u = std::span<const double>(v).subspan(0, grid.num_u());
                auto w = std::span<const double>(v).subspan(grid.num_u(), grid.num_w());
                apply_div(grid, w, du);
                apply_grad(grid, u, gw);
                const double resid = dot(du, u) + dot(gw, w);
                worst_adj = std::max(worst_adj, std::abs(resid) / dot(v, v));
            }
        }
        push("skew_symmetry", worst_skew <= 1e-12,
             "max |<Av,v>|/||v||^2 = " + fmt17(worst_skew) + " (tol 1e-12)");
        push("adjointness", worst_adj <= 1e-12,
             "max |<Dw,u>+<w,Gu>|/||v||^2 = " + fmt17(worst_adj) + " (tol 1e-12)");
    }

    // config problem assembles (fine kinds surface alignment errors here)
    DiscreteSystem dyn_system;
    std::string dyn_name;
    {
        try {
            dyn_system = make_system(cfg.problem, build_grid(cfg.nx));
            dyn_name = cfg.problem.name();
            push("problem_alignment", true,
                 cfg.problem.name() + " assembles on nx = " + std::to_string(cfg.nx));
        } catch (const AlignmentError& e) {
            push("problem_alignment", false, e.what());
            dyn_system = make_system(ProblemKind::limit_he(), build_grid(cfg.nx));
            dyn_name = "limit_he (fallback)";
        }
    }

    // causality: states stay exactly zero until the forcing switches on
    {
        const double horizon = std::min(cfg.t_end, cfg.forcing_t_off + 0.5);
        const TimeGrid time = make_time_grid(cfg.t_start, horizon, cfg.dt);
        const SpaceTimeField f =
            solve_evolution(dyn_system, forcing_from(cfg), time, cfg.theta_for(cfg.problem));
        double pre = 0;
        for (int k = 0; k <= time.num_steps(); ++k) {
            if (time.time(k) > cfg.forcing_t_on)
                break;
            for (double x : f.states[k])
                pre = std::max(pre, std::abs(x));
        }
        push("causality", pre == 0.0,
             "max |state| before forcing onset = " + fmt17(pre) + " on " + dyn_name +
                 " (must be exactly 0)");
    }

    // linearity of the solve in the forcing
    {
        const StaggeredGrid grid = build_grid(64);
        const DiscreteSystem sys = make_system(ProblemKind::limit_he(), grid);
        const TimeGrid time = make_time_grid(0.0, 2.5, 5e-3);
        const BumpPhi phi{0.3, 1.0, 1.0, 3};
        const ForcingSpec f1{phi, SpatialProfile::cosine(1)};
        const ForcingSpec f2{phi, SpatialProfile::gaussian(0.6, 0.1)};
        const double alpha = 0.7, beta = -1.3;
        auto combo = [&](double t, std::span<double> out) {
            std::vector<double> tmp(out.size());
            f1.sample(grid, t, out);
            f2.sample(grid, t, tmp);
            for (std::size_t i = 0; i < out.size(); ++i)
                out[i] = alpha * out[i] + beta * tmp[i];
        };
        const auto a = solve_evolution(sys, f1, time, 0.5);
        const auto b = solve_evolution(sys, f2, time, 0.5);
        const auto c = solve_evolution(sys, combo, time, 0.5, "combo");
        double worst = 0, scale = 0;
        for (int k = 0; k <= time.num_steps(); ++k) {
            for (int i = 0; i < grid.dim(); ++i) {
                const double want = alpha * a.states[k][i] + beta * b.states[k][i];
                worst = std::max(worst, std::abs(c.states[k][i] - want));
                scale = std::max(scale, std::abs(want));
            }
        }
        const double rel = worst / std::max(scale, 1e-300);
        push("linearity", rel <= 1e-11, "max relative superposition defect = " + fmt17(rel));
    }

    // midpoint dissipation identity, exact to rounding
    {
        double worst = 0;
        for (const ProblemKind& kind : {ProblemKind::limit_he(), ProblemKind::fine_he(2)}) {
            const StaggeredGrid grid = build_grid(16);
            const DiscreteSystem sys = make_system(kind, grid);
            const double dt = 0.01;
            const StepFactorization fac(sys, dt, 0.5);
            const auto v0 = rng.vec(grid.dim());
            const auto g0 = rng.vec(grid.dim());
            const auto g1 = rng.vec(grid.dim());
            std::vector<double> v1(grid.dim());
            fac.advance(sys, v0, g0, g1, v1);
            double m1 = 0, m0 = 0;
            std::vector<double> mid(grid.dim()), fmid(grid.dim());
            for (int i = 0; i < grid.dim(); ++i) {
                m1 += sys.m_diag[i] * v1[i] * v1[i];
                m0 += sys.m_diag[i] * v0[i] * v0[i];
                mid[i] = 0.5 * (v0[i] + v1[i]);
                fmid[i] = 0.5 * (g0[i] + g1[i]);
            }
            double ndiss = 0, work = 0;
            for (int i = 0; i < grid.dim(); ++i) {
                ndiss += sys.n_diag[i] * mid[i] * mid[i];
                work += fmid[i] * mid[i];
            }
            const double lhs = 0.5 * (m1 - m0);
            const double rhs = dt * (work - ndiss);
            worst = std::max(worst, std::abs(lhs - rhs) / (std::abs(lhs) + std::abs(rhs) + 1e-300));
        }
        push("dissipation_identity", worst <= 1e-10,
             "max relative defect of the theta=1/2 energy balance = " + fmt17(worst));
    }

    // solvability constants match min{1, nu} exactly on the fine systems
    {
        bool ok = true;
        std::string detail;
        const StaggeredGrid grid = build_grid(16);
        for (const ProblemKind& kind : {ProblemKind::fine_he(4), ProblemKind::fine_hp(4)}) {
            const DiscreteSystem sys = make_system(kind, grid);
            for (double nu : {0.5, 1.0, 2.0}) {
                const double c = solvability_constant(sys, nu);
                const double want = std::min(1.0, nu);
                if (c != want) {
                    ok = false;
                    detail = kind.name() + " nu=" + fmt17(nu) + ": c = " + fmt17(c) +
                             " != " + fmt17(want);
                }
            }
        }
        push("solvability_constant", ok, ok ? "c = min{1, nu} exactly for fine HE/HP" : detail);
    }

    // discrete symbol eigenvalues vs the assembled operator on sampled modes
    {
        double worst = 0;
        const StaggeredGrid grid = build_grid(std::min(cfg.nx, 64));
        for (const ProblemKind& kind : {ProblemKind::limit_he(), ProblemKind::limit_hp()}) {
            const DiscreteSystem sys = make_system(kind, grid);
            const auto spec = limit_spectrum(kind, grid, 1);
            const auto& mode = spec.modes[1];
            const double d = mode.symbol;
            const double pi = 3.14159265358979323846;
            // eigenvector (alpha, beta) = (d, lambda m_u + n_u) of the 2x2 symbol
            const std::complex<double> lambda = mode.lambda1;
            const std::complex<double> alpha = d;
            const std::complex<double> beta = lambda * sys.m_diag[0] + sys.n_diag[0];
            std::vector<double> zr(grid.dim()), zi(grid.dim());
            for (int i = 0; i < grid.num_u(); ++i) {
                const double base = std::cos(pi * grid.u_coord(i));
                zr[i] = alpha.real() * base;
                zi[i] = alpha.imag() * base;
            }
            for (int j = 0; j < grid.num_w(); ++j) {
                const double base = std::sin(pi * grid.w_coord(j));
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
                const std::complex<double> r =
                    lambda * sys.m_diag[i] * z + sys.n_diag[i] * z + az;
                resid2 += std::norm(r);
                scale2 += std::norm(lambda * sys.m_diag[i] * z) + std::norm(sys.n_diag[i] * z) +
                          std::norm(az);
            }
            worst = std::max(worst, std::sqrt(resid2 / scale2));
        }
        push("spectrum_mode_action", worst <= 1e-10,
             "max relative residual of (lambda M + N + A) on the sampled k=1 mode = " +
                 fmt17(worst));
    }

    // pairing-defect closed forms
    {
        bool ok = true;
        std::string detail = "defect(x; n) = 1/(8n) and defect(1; n) = 0 for n in {4,16,64}";
        for (int n : {4, 16, 64}) {
            const MaterialLayout layout{n, 0.5, ProblemFamily::HyperbolicElliptic};
            const double dl = pairing_defect(layout, SpatialProfile::linear());
            const double dc = pairing_defect(layout, SpatialProfile::constant());
            if (std::abs(dl - 1.0 / (8.0 * n)) > 1e-12 || dc > 1e-14) {
                ok = false;
                detail = "n=" + std::to_string(n) + ": defect(x) = " + fmt17(dl) +
                         ", defect(1) = " + fmt17(dc);
            }
        }
        push("pairing_defect_closed_form", ok, detail);
    }

    // pure wave + midpoint conserves the state norm after the forcing ends
    {
        const StaggeredGrid grid = build_grid(16);
        const DiscreteSystem sys = make_system(ProblemKind::pure_wave(), grid);
        const TimeGrid time = make_time_grid(0.0, 2.0, 5e-3);
        const ForcingSpec f{BumpPhi{0.25, 0.75, 1.0, 3}, SpatialProfile::gaussian(0.4, 0.12)};
        const SpaceTimeField field = solve_evolution(sys, f, time, 0.5);
        int k_off = 0;
        while (time.time(k_off) < 0.75)
            ++k_off;
        const double n0 = state_norm(grid, field.states[k_off]);
        const double n1 = state_norm(grid, field.states[time.num_steps()]);
        const double drift = std::abs(n1 / n0 - 1.0);
        push("wave_norm_conservation", drift <= 1e-12,
             "norm drift over the free flight = " + fmt17(drift));
    }

    // misaligned fine layouts must be rejected
    {
        bool threw = false;
        try {
            make_system(ProblemKind::fine_he(3), build_grid(16));
        } catch (const AlignmentError&) {
            threw = true;
        }
        push("alignment_guard", threw,
             threw ? "fine_he(3) on nx = 16 rejected" : "misaligned grid was not rejected");
    }

    res.all_pass = true;
    for (const auto& item : res.items)
        res.all_pass = res.all_pass && item.pass;

    res.validation_json_path = out_path(cfg, "validation.json");
    json j;
    j["all_pass"] = res.all_pass;
    json items = json::array();
    for (const auto& item : res.items) {
        json it;
        it["id"] = item.id;
        it["pass"] = item.pass;
        it["detail"] = item.detail;
        items.push_back(it);
    }
    j["items"] = items;
    write_json(res.validation_json_path, j);
    return res;
}

} // namespace mixtype
