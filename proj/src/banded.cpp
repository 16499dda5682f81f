#include "mixtype/banded.hpp"

#include "mixtype/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mixtype {

BandedMatrix::BandedMatrix(int n, int kl, int ku)
    : n_(n), kl_(kl), ku_(ku), ldab_(2 * kl + ku + 1), ab_(std::size_t(ldab_) * n, 0.0) {
    if (n < 1 || kl < 0 || ku < 0)
        throw std::invalid_argument("BandedMatrix: bad shape");
}

double BandedMatrix::get(int i, int j) const {
    if (!in_band(i, j))
        return 0.0;
    return ab_[index(i, j)];
}

void BandedMatrix::set(int i, int j, double v) {
    if (!in_band(i, j))
        throw std::out_of_range("BandedMatrix::set outside band");
    ab_[index(i, j)] = v;
}

void BandedMatrix::add(int i, int j, double v) {
    if (!in_band(i, j))
        throw std::out_of_range("BandedMatrix::add outside band");
    ab_[index(i, j)] += v;
}

void BandedMatrix::apply(std::span<const double> x, std::span<double> y) const {
    for (int i = 0; i < n_; ++i) {
        double sum = 0;
        const int j0 = std::max(0, i - kl_);
        const int j1 = std::min(n_ - 1, i + ku_);
        for (int j = j0; j <= j1; ++j)
            sum += ab_[index(i, j)] * x[j];
        y[i] = sum;
    }
}

// Banded LU with partial pivoting (the gbtrf/gbtrs pattern). Row pivoting can
// widen the upper band to ku + kl; the extra rows of the LAPACK layout hold
// that fill.
BandedLU::BandedLU(const BandedMatrix& a, const ColumnNamer& column_name)
    : n_(a.n_), kl_(a.kl_), ku_(a.ku_), ldab_(a.ldab_), ab_(a.ab_), ipiv_(a.n_, 0) {
    const int kv = kl_ + ku_; // working upper bandwidth
    auto at = [&](int row, int col) -> double& { return ab_[row + std::size_t(ldab_) * col]; };

    for (int j = 0; j < n_; ++j) {
        const int km = std::min(kl_, n_ - 1 - j); // subdiagonals in column j
        int jp = 0;
        double best = std::abs(at(kl_ + ku_, j));
        for (int t = 1; t <= km; ++t) {
            const double v = std::abs(at(kl_ + ku_ + t, j));
            if (v > best) {
                best = v;
                jp = t;
            }
        }
        ipiv_[j] = j + jp;
        if (best == 0.0) {
            const std::string which = column_name ? column_name(j) : ("column " + std::to_string(j));
            throw SingularMatrixError("banded LU: matrix exactly singular at " + which);
        }
        const int ju = std::min(n_ - 1, j + kv);
        if (jp != 0) {
            for (int c = j; c <= ju; ++c)
                std::swap(at(kl_ + ku_ + j - c, c), at(kl_ + ku_ + j + jp - c, c));
        }
        if (km > 0) {
            const double piv = at(kl_ + ku_, j);
            for (int t = 1; t <= km; ++t)
                at(kl_ + ku_ + t, j) /= piv;
            for (int c = j + 1; c <= ju; ++c) {
                const double f = at(kl_ + ku_ + j - c, c);
                if (f != 0.0) {
                    for (int t = 1; t <= km; ++t)
                        at(kl_ + ku_ + j + t - c, c) -= at(kl_ + ku_ + t, j) * f;
                }
            }
        }
    }
}

void BandedLU::solve(std::span<double> b) const {
    if (int(b.size()) != n_)
        throw std::invalid_argument("BandedLU::solve: size mismatch");
    const int kv = kl_ + ku_;
    auto at = [&](int row, int col) -> const double& {
        return ab_[row + std::size_t(ldab_) * col];
    };

    // L y = P b
    for (int j = 0; j < n_; ++j) {
        const int p = ipiv_[j];
        if (p != j)
            std::swap(b[j], b[p]);
        const int km = std::min(kl_, n_ - 1 - j);
        for (int t = 1; t <= km; ++t)
            b[j + t] -= at(kl_ + ku_ + t, j) * b[j];
    }
    // U x = y
    for (int j = n_ - 1; j >= 0; --j) {
        b[j] /= at(kl_ + ku_, j);
        const int i0 = std::max(0, j - kv);
        for (int i = i0; i < j; ++i)
            b[i] -= at(kl_ + ku_ + i - j, j) * b[j];
    }
}

} // namespace mixtype
