#include "mixtype/profiles.hpp"

#include <cmath>

namespace mixtype {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double SpatialProfile::operator()(double x) const {
    switch (kind) {
    case Kind::Constant: return 1.0;
    case Kind::Linear: return x;
    case Kind::Cosine: return std::cos(mode * kPi * x);
    case Kind::Gaussian: {
        const double z = (x - center) / width;
        return std::exp(-0.5 * z * z);
    }
    }
    return 0.0;
}

std::string SpatialProfile::name() const {
    switch (kind) {
    case Kind::Constant: return "constant";
    case Kind::Linear: return "linear";
    case Kind::Cosine: return "cos:" + std::to_string(mode);
    case Kind::Gaussian:
        return "gauss:" + std::to_string(center) + "," + std::to_string(width);
    }
    return "?";
}

double TimeProfile::operator()(double t) const {
    if (kind == Kind::Gaussian) {
        const double z = (t - center) / width;
        return std::exp(-0.5 * z * z);
    }
    if (t <= t_on || t >= t_off)
        return 0.0;
    const double len = t_off - t_on;
    const double s = 4.0 * (t - t_on) * (t_off - t) / (len * len);
    return std::pow(s, power);
}

std::string TimeProfile::name() const {
    if (kind == Kind::Gaussian)
        return "gauss(t;" + std::to_string(center) + "," + std::to_string(width) + ")";
    return "bump(t;" + std::to_string(t_on) + "," + std::to_string(t_off) + ",p=" +
           std::to_string(power) + ")";
}

} // namespace mixtype
