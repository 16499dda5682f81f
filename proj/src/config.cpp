#include "mixtype/config.hpp"

#include "mixtype/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace mixtype {

double ExperimentConfig::theta_for(const ProblemKind& kind) const {
    if (theta)
        return *theta;
    // Midpoint for the regular limit/wave systems (energy exactness); backward
    // Euler wherever M has zero entries (the DAE-type rows).
    switch (kind.tag) {
    case ProblemTag::LimitHE:
    case ProblemTag::LimitHP:
    case ProblemTag::PureWave:
        return 0.5;
    default:
        return 1.0;
    }
}

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(int line, const std::string& msg) {
    throw ConfigError("config line " + std::to_string(line) + ": " + msg);
}

double parse_double(const std::string& raw, int line) {
    const std::string s = trim(raw);
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size() || s.empty())
        fail(line, "expected a number, got '" + s + "'");
    return v;
}

int parse_int(const std::string& raw, int line) {
    const double v = parse_double(raw, line);
    if (v != std::floor(v) || std::abs(v) > 1e9)
        fail(line, "expected an integer, got '" + trim(raw) + "'");
    return int(v);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep))
        out.push_back(cur);
    return out;
}

SpatialProfile parse_profile(const std::string& raw, int line) {
    const std::string s = trim(raw);
    if (s == "constant")
        return SpatialProfile::constant();
    if (s.rfind("cos:", 0) == 0)
        return SpatialProfile::cosine(parse_int(s.substr(4), line));
    if (s.rfind("gauss:", 0) == 0) {
        const auto parts = split(s.substr(6), ',');
        if (parts.size() != 2)
            fail(line, "gauss profile needs 'gauss:center,width'");
        const double w = parse_double(parts[1], line);
        if (!(w > 0))
            fail(line, "gauss profile width must be positive");
        return SpatialProfile::gaussian(parse_double(parts[0], line), w);
    }
    fail(line, "unknown forcing profile '" + s + "' (constant | cos:k | gauss:c,w)");
}

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

ExperimentConfig parse_config(const std::string& text) {
    ExperimentConfig cfg;
    std::string problem_name = "limit_he";
    int fine_n = 4;
    int problem_line = 0, n_line = 0;

    std::istringstream is(text);
    std::string raw;
    int line = 0;
    while (std::getline(is, raw)) {
        ++line;
        const auto hash = raw.find('#');
        if (hash != std::string::npos)
            raw.erase(hash);
        const std::string stripped = trim(raw);
        if (stripped.empty())
            continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            fail(line, "expected 'key = value'");
        const std::string key = trim(stripped.substr(0, eq));
        const std::string val = trim(stripped.substr(eq + 1));
        if (val.empty())
            fail(line, "missing value for key '" + key + "'");

        if (key == "problem") {
            problem_name = val;
            problem_line = line;
        } else if (key == "n") {
            fine_n = parse_int(val, line);
            n_line = line;
            if (fine_n < 1)
                fail(line, "n must be >= 1");
        } else if (key == "nx") {
            cfg.nx = parse_int(val, line);
            if (cfg.nx < 2)
                fail(line, "nx must be >= 2");
        } else if (key == "dt") {
            cfg.dt = parse_double(val, line);
            if (!(cfg.dt > 0))
                fail(line, "dt must be positive");
        } else if (key == "theta") {
            const double th = parse_double(val, line);
            if (std::abs(th - 0.5) > 1e-12 && std::abs(th - 1.0) > 1e-12)
                fail(line, "theta must be 0.5 or 1.0");
            cfg.theta = th;
        } else if (key == "t_start") {
            cfg.t_start = parse_double(val, line);
        } else if (key == "t_end") {
            cfg.t_end = parse_double(val, line);
        } else if (key == "forcing.t_on") {
            cfg.forcing_t_on = parse_double(val, line);
        } else if (key == "forcing.t_off") {
            cfg.forcing_t_off = parse_double(val, line);
        } else if (key == "forcing.amp") {
            cfg.forcing_amp = parse_double(val, line);
        } else if (key == "forcing.power") {
            cfg.forcing_power = parse_int(val, line);
            if (cfg.forcing_power < 1)
                fail(line, "forcing.power must be >= 1");
        } else if (key == "forcing.profile") {
            cfg.forcing_profile = parse_profile(val, line);
        } else if (key == "nu_list") {
            cfg.nu_list.clear();
            for (const auto& part : split(val, ','))
                cfg.nu_list.push_back(parse_double(part, line));
            if (cfg.nu_list.empty())
                fail(line, "nu_list must not be empty");
        } else if (key == "sweep") {
            cfg.sweep.clear();
            for (const auto& part : split(val, ',')) {
                const int n = parse_int(part, line);
                if (n < 1)
                    fail(line, "sweep entries must be >= 1");
                cfg.sweep.push_back(n);
            }
        } else if (key == "out_dir") {
            cfg.out_dir = val;
        } else {
            fail(line, "unknown key '" + key + "'");
        }
    }

    if (problem_name == "limit_he")
        cfg.problem = ProblemKind::limit_he();
    else if (problem_name == "limit_hp")
        cfg.problem = ProblemKind::limit_hp();
    else if (problem_name == "fine_he")
        cfg.problem = ProblemKind::fine_he(fine_n);
    else if (problem_name == "fine_hp")
        cfg.problem = ProblemKind::fine_hp(fine_n);
    else if (problem_name == "pure_wave")
        cfg.problem = ProblemKind::pure_wave();
    else if (problem_name == "pure_elliptic")
        cfg.problem = ProblemKind::pure_elliptic();
    else if (problem_name == "pure_parabolic")
        cfg.problem = ProblemKind::pure_parabolic();
    else
        fail(problem_line ? problem_line : 1, "unknown problem '" + problem_name + "'");
    (void)n_line;

    // cross-key invariants
    if (!(cfg.t_end > cfg.t_start))
        throw ConfigError("config: t_end must exceed t_start");
    if (!(cfg.forcing_t_on < cfg.forcing_t_off))
        throw ConfigError("config: forcing.t_on must be below forcing.t_off");
    if (!(cfg.forcing_t_on > cfg.t_start))
        throw ConfigError("config: forcing.t_on must be above t_start (causal zero start)");
    if (!(cfg.forcing_t_off < cfg.t_end))
        throw ConfigError("config: forcing.t_off must be below t_end");
    if (!cfg.sweep.empty()) {
        std::vector<int> sorted = cfg.sweep;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw ConfigError("config: sweep entries must be distinct");
        const int needed = 2 * sorted.back();
        if (cfg.nx % needed != 0)
            throw ConfigError("config: nx = " + std::to_string(cfg.nx) +
                              " is not a multiple of 2*max(sweep) = " + std::to_string(needed));
    }
    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("config: cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string render_config(const ExperimentConfig& cfg) {
    std::ostringstream os;
    os << "problem = ";
    switch (cfg.problem.tag) {
    case ProblemTag::LimitHE: os << "limit_he"; break;
    case ProblemTag::LimitHP: os << "limit_hp"; break;
    case ProblemTag::FineHE: os << "fine_he"; break;
    case ProblemTag::FineHP: os << "fine_hp"; break;
    case ProblemTag::PureWave: os << "pure_wave"; break;
    case ProblemTag::PureElliptic: os << "pure_elliptic"; break;
    case ProblemTag::PureParabolic: os << "pure_parabolic"; break;
    }
    os << "\n";
    if (cfg.problem.is_fine())
        os << "n = " << cfg.problem.n << "\n";
    os << "nx = " << cfg.nx << "\n";
    os << "dt = " << fmt17(cfg.dt) << "\n";
    if (cfg.theta)
        os << "theta = " << fmt17(*cfg.theta) << "\n";
    os << "t_start = " << fmt17(cfg.t_start) << "\n";
    os << "t_end = " << fmt17(cfg.t_end) << "\n";
    os << "forcing.t_on = " << fmt17(cfg.forcing_t_on) << "\n";
    os << "forcing.t_off = " << fmt17(cfg.forcing_t_off) << "\n";
    os << "forcing.amp = " << fmt17(cfg.forcing_amp) << "\n";
    os << "forcing.power = " << cfg.forcing_power << "\n";
    os << "forcing.profile = ";
    switch (cfg.forcing_profile.kind) {
    case SpatialProfile::Kind::Constant: os << "constant"; break;
    case SpatialProfile::Kind::Linear: os << "linear"; break;
    case SpatialProfile::Kind::Cosine: os << "cos:" << cfg.forcing_profile.mode; break;
    case SpatialProfile::Kind::Gaussian:
        os << "gauss:" << fmt17(cfg.forcing_profile.center) << ","
           << fmt17(cfg.forcing_profile.width);
        break;
    }
    os << "\n";
    os << "nu_list = ";
    for (std::size_t i = 0; i < cfg.nu_list.size(); ++i)
        os << (i ? "," : "") << fmt17(cfg.nu_list[i]);
    os << "\n";
    if (!cfg.sweep.empty()) {
        os << "sweep = ";
        for (std::size_t i = 0; i < cfg.sweep.size(); ++i)
            os << (i ? "," : "") << cfg.sweep[i];
        os << "\n";
    }
    os << "out_dir = " << cfg.out_dir << "\n";
    return os.str();
}

} // namespace mixtype
