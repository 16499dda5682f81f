#pragma once

#include <string>

namespace mixtype {

/// Catalogued spatial profile g(x) on [0,1].
struct SpatialProfile {
    enum class Kind { Constant, Linear, Cosine, Gaussian };

    Kind kind = Kind::Constant;
    int mode = 0;        // Cosine: g(x) = cos(mode*pi*x)
    double center = 0.5; // Gaussian
    double width = 0.1;  // Gaussian

    static SpatialProfile constant() { return {Kind::Constant, 0, 0, 0}; }
    static SpatialProfile linear() { return {Kind::Linear, 0, 0, 0}; }
    static SpatialProfile cosine(int k) { return {Kind::Cosine, k, 0, 0}; }
    static SpatialProfile gaussian(double c, double w) { return {Kind::Gaussian, 0, c, w}; }

    double operator()(double x) const;
    std::string name() const;
};

/// Temporal profile rho(t) for test functions.
struct TimeProfile {
    enum class Kind { Gaussian, PolyBump };

    Kind kind = Kind::Gaussian;
    double center = 0, width = 1;      // Gaussian
    double t_on = 0, t_off = 1;        // PolyBump
    int power = 3;                     // PolyBump

    static TimeProfile gaussian(double c, double w) {
        TimeProfile p;
        p.kind = Kind::Gaussian;
        p.center = c;
        p.width = w;
        return p;
    }
    static TimeProfile poly_bump(double on, double off, int power = 3) {
        TimeProfile p;
        p.kind = Kind::PolyBump;
        p.t_on = on;
        p.t_off = off;
        p.power = power;
        return p;
    }

    double operator()(double t) const;
    std::string name() const;
};

} // namespace mixtype
