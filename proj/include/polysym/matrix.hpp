#pragma once

// Square matrices over the truncated series algebra, the dilation homotopy
// M_t = [m_ij((1 - t) .)], and transvection factorization of constant SL_n matrices.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "polysym/series.hpp"

namespace polysym {

/// Dense n x n matrix of complex doubles, row-major.
class ConstantMatrix {
public:
    explicit ConstantMatrix(std::size_t n) : n_(n), a_(n * n, 0.0) {}
    ConstantMatrix(std::size_t n, std::vector<std::complex<double>> row_major);

    static ConstantMatrix identity(std::size_t n);

    std::size_t n() const { return n_; }
    std::complex<double>& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const std::complex<double>& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    friend ConstantMatrix operator*(const ConstantMatrix& a, const ConstantMatrix& b);

private:
    std::size_t n_;
    std::vector<std::complex<double>> a_;
};

std::complex<double> determinant(const ConstantMatrix& c);
double max_entry_distance(const ConstantMatrix& a, const ConstantMatrix& b);

class SeriesMatrix {
public:
    /// Throws DimensionMismatch unless there are n*n entries sharing one dim and cap.
    SeriesMatrix(std::size_t n, std::vector<TruncatedSeries> row_major);

    static SeriesMatrix identity(std::size_t n, std::size_t dim, unsigned cap);
    /// Exact rational images of the double entries.
    static SeriesMatrix constant(const ConstantMatrix& c, std::size_t dim, unsigned cap);

    std::size_t n() const { return n_; }
    std::size_t dim() const { return entries_.front().dim(); }
    unsigned cap() const { return entries_.front().cap(); }
    const TruncatedSeries& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    const std::vector<TruncatedSeries>& entries() const { return entries_; }

    friend bool operator==(const SeriesMatrix& a, const SeriesMatrix& b) {
        return a.n_ == b.n_ && a.entries_ == b.entries_;
    }

private:
    std::size_t n_;
    std::vector<TruncatedSeries> entries_;
};

SeriesMatrix multiply(const SeriesMatrix& a, const SeriesMatrix& b);
std::vector<TruncatedSeries> multiply(const SeriesMatrix& m, std::span<const TruncatedSeries> v);

/// Leibniz expansion; n <= 6.
TruncatedSeries det(const SeriesMatrix& m);

/// det(m) has stored terms exactly {1}.
bool has_unit_determinant(const SeriesMatrix& m);

/// sqrt(sum_ij upper(||m_ij||_1)^2), an upper bound for the operator norm of m
/// acting on column vectors with norm sqrt(sum ||v_i||_1^2).
double op_norm_bound(const SeriesMatrix& m);

SeriesMatrix dilate(const SeriesMatrix& m, const Rational& r);

/// Entrywise dilation by 1 - t. Requires det(m) == 1 and 0 <= t <= 1.
SeriesMatrix dilation_path(const SeriesMatrix& m, const Rational& t);

/// The matrix of constant terms m_ij(0).
ConstantMatrix constant_part(const SeriesMatrix& m);

/// E_ij(alpha) = I + alpha e_ij, 0-based indices with i != j.
struct Transvection {
    std::size_t i = 0;
    std::size_t j = 1;
    std::complex<double> alpha;

    ConstantMatrix matrix(std::size_t n) const;
};

/// Left-to-right product of the factors.
ConstantMatrix product(std::span<const Transvection> factors, std::size_t n);

/// Transvections whose ordered product reconstructs C within `tol` (max-entry norm).
/// Throws PreconditionError if |det C - 1| >= tol, NumericalBreakdown on an unusable pivot.
std::vector<Transvection> factor_constant_sl(const ConstantMatrix& c, double tol);

struct HomotopySample {
    double t = 0.0;
    SeriesMatrix matrix;
    /// upper ||det - 1||_1
    double det_residual = 0.0;
    double op_norm_bound = 0.0;
};

/// num_steps samples at t = k/(num_steps - 1) of the path that dilates M to its
/// constant matrix C on [0, 1/2] and then shrinks the transvection parameters of C
/// linearly to zero on [1/2, 1].
std::vector<HomotopySample> full_homotopy_sample(const SeriesMatrix& m, unsigned num_steps, double tol = 1e-10);

} // namespace polysym
