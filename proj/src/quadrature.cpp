#include "mixtype/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace mixtype {

namespace {

std::vector<std::pair<double, double>> compute_gl(int order) {
    if (order < 1)
        throw std::invalid_argument("gauss_legendre: order must be >= 1");
    std::vector<std::pair<double, double>> nw(order);
    const double pi = 3.14159265358979323846;
    for (int i = 0; i < (order + 1) / 2; ++i) {
        // Chebyshev-based initial guess for the i-th positive root.
        double x = std::cos(pi * (i + 0.75) / (order + 0.5));
        double pp = 0;
        for (int it = 0; it < 100; ++it) {
            // Legendre recurrence: p1 = P_order(x), pp = P'_order(x).
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= order; ++k) {
                const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            if (order == 1) {
                p1 = x;
                p0 = 1.0;
            }
            pp = order * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15)
                break;
        }
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        nw[i] = {-x, w};
        nw[order - 1 - i] = {x, w};
    }
    if (order % 2 == 1)
        nw[order / 2].first = 0.0; // the middle root is exactly 0
    return nw;
}

} // namespace

const std::vector<std::pair<double, double>>& gauss_legendre(int order) {
    static std::mutex mu;
    static std::map<int, std::vector<std::pair<double, double>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(order);
    if (it == cache.end())
        it = cache.emplace(order, compute_gl(order)).first;
    return it->second;
}

double integrate_gl(const std::function<double(double)>& f, double a, double b, int order) {
    const auto& nw = gauss_legendre(order);
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0;
    for (const auto& [x, w] : nw)
        sum += w * f(mid + half * x);
    return sum * half;
}

} // namespace mixtype
