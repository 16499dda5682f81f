// Brute-force reference implementations used only by the test suites. These
// stay independent of the library code paths they check.
#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace oracle {

/// Dense Gaussian elimination with partial pivoting; throws on singular.
inline std::vector<double> dense_solve(std::vector<std::vector<double>> a,
                                       std::vector<double> b) {
    const int n = int(a.size());
    for (int k = 0; k < n; ++k) {
        int piv = k;
        for (int i = k + 1; i < n; ++i)
            if (std::abs(a[i][k]) > std::abs(a[piv][k]))
                piv = i;
        if (a[piv][k] == 0.0)
            throw std::runtime_error("dense_solve: singular");
        std::swap(a[k], a[piv]);
        std::swap(b[k], b[piv]);
        for (int i = k + 1; i < n; ++i) {
            const double f = a[i][k] / a[k][k];
            if (f == 0.0)
                continue;
            for (int j = k; j < n; ++j)
                a[i][j] -= f * a[k][j];
            b[i] -= f * b[k];
        }
    }
    std::vector<double> x(n);
    for (int i = n - 1; i >= 0; --i) {
        double s = b[i];
        for (int j = i + 1; j < n; ++j)
            s -= a[i][j] * x[j];
        x[i] = s / a[i][i];
    }
    return x;
}

/// Composite trapezoid on [a, b] with `panels` panels.
inline double trapezoid(const std::function<double(double)>& f, double a, double b, int panels) {
    double sum = 0.5 * (f(a) + f(b));
    for (int i = 1; i < panels; ++i)
        sum += f(a + (b - a) * i / panels);
    return sum * (b - a) / panels;
}

/// Membership in the open hyperbolic cells U_j ((j-1)/n, (j-1+duty)/n) by
/// direct enumeration.
inline bool in_hyperbolic_cell(double x, int n, double duty) {
    for (int j = 1; j <= n; ++j) {
        const double lo = double(j - 1) / n;
        const double hi = (j - 1 + duty) / n;
        if (x > lo && x < hi)
            return true;
    }
    return false;
}

/// int_0^1 a(n x) x dx for duty 1/2: sum of x over the half cells.
inline double linear_pairing_closed_form(int n) {
    double sum = 0.0;
    for (int j = 1; j <= n; ++j) {
        const double lo = double(j - 1) / n;
        const double hi = (2.0 * j - 1) / (2.0 * n);
        sum += 0.5 * (hi * hi - lo * lo);
    }
    return sum;
}

} // namespace oracle
