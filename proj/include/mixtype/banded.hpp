#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace mixtype {

/// Square banded matrix with kl sub- and ku superdiagonals, LAPACK band
/// layout: entry (i,j) lives at row (kl + ku + i - j) of column j. The top kl
/// rows are fill-in workspace for the pivoted factorization.
class BandedMatrix {
public:
    BandedMatrix(int n, int kl, int ku);

    int size() const { return n_; }
    int lower() const { return kl_; }
    int upper() const { return ku_; }

    /// In-band access; out-of-band reads return 0, out-of-band writes throw.
    double get(int i, int j) const;
    void set(int i, int j, double v);
    void add(int i, int j, double v);

    /// y = A x.
    void apply(std::span<const double> x, std::span<double> y) const;

    const std::vector<double>& storage() const { return ab_; }

private:
    friend class BandedLU;
    int n_, kl_, ku_, ldab_;
    std::vector<double> ab_; // ldab_ x n_, column-major

    int index(int i, int j) const { return kl_ + ku_ + i - j + ldab_ * j; }
    bool in_band(int i, int j) const {
        return i >= 0 && i < n_ && j >= 0 && j < n_ && i - j <= kl_ && j - i <= ku_;
    }
};

/// LU factorization with partial pivoting of a BandedMatrix (the banded
/// analogue of getrf/getrs). Throws SingularMatrixError on an exactly singular
/// matrix, naming the offending column through `column_name` when provided.
class BandedLU {
public:
    using ColumnNamer = std::function<std::string(int)>;

    explicit BandedLU(const BandedMatrix& a, const ColumnNamer& column_name = {});

    /// Solve A x = b in place.
    void solve(std::span<double> b) const;

    int size() const { return n_; }

private:
    int n_, kl_, ku_, ldab_;
    std::vector<double> ab_;
    std::vector<int> ipiv_;
};

} // namespace mixtype
