#include "polysym/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "polysym/errors.hpp"
#include "polysym/symmetry.hpp"

namespace polysym {

ConstantMatrix::ConstantMatrix(std::size_t n, std::vector<std::complex<double>> row_major)
    : n_(n), a_(std::move(row_major)) {
    if (a_.size() != n * n) throw DimensionMismatch("constant matrix needs n*n entries");
}

ConstantMatrix ConstantMatrix::identity(std::size_t n) {
    ConstantMatrix m(n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = 1.0;
    return m;
}

ConstantMatrix operator*(const ConstantMatrix& a, const ConstantMatrix& b) {
    if (a.n() != b.n()) throw DimensionMismatch("matrix sizes differ");
    ConstantMatrix out(a.n());
    for (std::size_t i = 0; i < a.n(); ++i)
        for (std::size_t k = 0; k < a.n(); ++k)
            for (std::size_t j = 0; j < a.n(); ++j) out(i, j) += a(i, k) * b(k, j);
    return out;
}

std::complex<double> determinant(const ConstantMatrix& c) {
    // Partial pivoting LU.
    ConstantMatrix a = c;
    const std::size_t n = a.n();
    std::complex<double> det = 1.0;
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t p = j;
        for (std::size_t r = j + 1; r < n; ++r)
            if (std::abs(a(r, j)) > std::abs(a(p, j))) p = r;
        if (a(p, j) == 0.0) return 0.0;
        if (p != j) {
            for (std::size_t k = 0; k < n; ++k) std::swap(a(p, k), a(j, k));
            det = -det;
        }
        det *= a(j, j);
        for (std::size_t r = j + 1; r < n; ++r) {
            const auto m = a(r, j) / a(j, j);
            for (std::size_t k = j; k < n; ++k) a(r, k) -= m * a(j, k);
        }
    }
    return det;
}

double max_entry_distance(const ConstantMatrix& a, const ConstantMatrix& b) {
    if (a.n() != b.n()) throw DimensionMismatch("matrix sizes differ");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.n(); ++i)
        for (std::size_t j = 0; j < a.n(); ++j) worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
    return worst;
}

SeriesMatrix::SeriesMatrix(std::size_t n, std::vector<TruncatedSeries> row_major)
    : n_(n), entries_(std::move(row_major)) {
    if (n == 0) throw PreconditionError("matrix size must be positive");
    if (entries_.size() != n * n)
        throw DimensionMismatch("a " + std::to_string(n) + "x" + std::to_string(n) + " matrix needs " +
                                std::to_string(n * n) + " entries, got " + std::to_string(entries_.size()));
    for (const auto& e : entries_)
        if (e.dim() != entries_.front().dim() || e.cap() != entries_.front().cap())
            throw DimensionMismatch("matrix entries must share dimension and cap");
}

SeriesMatrix SeriesMatrix::identity(std::size_t n, std::size_t dim, unsigned cap) {
    std::vector<TruncatedSeries> e;
    e.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            e.push_back(TruncatedSeries::constant(dim, cap, ComplexRational(i == j ? 1 : 0)));
    return SeriesMatrix(n, std::move(e));
}

SeriesMatrix SeriesMatrix::constant(const ConstantMatrix& c, std::size_t dim, unsigned cap) {
    std::vector<TruncatedSeries> e;
    e.reserve(c.n() * c.n());
    for (std::size_t i = 0; i < c.n(); ++i)
        for (std::size_t j = 0; j < c.n(); ++j)
            e.push_back(TruncatedSeries::constant(
                dim, cap, ComplexRational(rational_from_double(c(i, j).real()), rational_from_double(c(i, j).imag()))));
    return SeriesMatrix(c.n(), std::move(e));
}

SeriesMatrix multiply(const SeriesMatrix& a, const SeriesMatrix& b) {
    if (a.n() != b.n()) throw DimensionMismatch("matrix sizes differ");
    std::vector<TruncatedSeries> e;
    for (std::size_t i = 0; i < a.n(); ++i)
        for (std::size_t j = 0; j < a.n(); ++j) {
            TruncatedSeries acc(a.dim(), std::min(a.cap(), b.cap()));
            for (std::size_t k = 0; k < a.n(); ++k) acc = add(acc, multiply(a(i, k), b(k, j)));
            e.push_back(std::move(acc));
        }
    return SeriesMatrix(a.n(), std::move(e));
}

std::vector<TruncatedSeries> multiply(const SeriesMatrix& m, std::span<const TruncatedSeries> v) {
    if (v.size() != m.n()) throw DimensionMismatch("vector length differs from matrix size");
    std::vector<TruncatedSeries> out;
    for (std::size_t i = 0; i < m.n(); ++i) {
        TruncatedSeries acc(m.dim(), std::min(m.cap(), v.front().cap()));
        for (std::size_t k = 0; k < m.n(); ++k) acc = add(acc, multiply(m(i, k), v[k]));
        out.push_back(std::move(acc));
    }
    return out;
}

TruncatedSeries det(const SeriesMatrix& m) {
    constexpr std::size_t max_n = 6;
    if (m.n() > max_n)
        throw PreconditionError("det: n=" + std::to_string(m.n()) + " exceeds the supported maximum of 6");
    TruncatedSeries total(m.dim(), m.cap());
    for (const auto& sigma : Permutation::all(m.n())) {
        bool odd = false;
        for (std::size_t a = 0; a < m.n(); ++a)
            for (std::size_t b = a + 1; b < m.n(); ++b)
                if (sigma(a) > sigma(b)) odd = !odd;

        bool vanishes = false;
        for (std::size_t i = 0; i < m.n() && !vanishes; ++i) vanishes = m(i, sigma(i)).is_zero();
        if (vanishes) continue;

        TruncatedSeries term = m(0, sigma(0));
        for (std::size_t i = 1; i < m.n(); ++i) term = multiply(term, m(i, sigma(i)));
        total = odd ? subtract(total, term) : add(total, term);
    }
    return total;
}

bool has_unit_determinant(const SeriesMatrix& m) {
    const auto d = det(m);
    return d.terms() == TruncatedSeries::constant(m.dim(), m.cap(), ComplexRational(1)).terms();
}

double op_norm_bound(const SeriesMatrix& m) {
    Rational sum = 0;
    for (const auto& e : m.entries()) {
        const Rational u = wiener_norm(e).upper;
        sum += u * u;
    }
    return std::nextafter(std::sqrt(to_double(sum)), std::numeric_limits<double>::infinity());
}

SeriesMatrix dilate(const SeriesMatrix& m, const Rational& r) {
    std::vector<TruncatedSeries> e;
    e.reserve(m.entries().size());
    for (const auto& x : m.entries()) e.push_back(dilate(x, r));
    return SeriesMatrix(m.n(), std::move(e));
}

SeriesMatrix dilation_path(const SeriesMatrix& m, const Rational& t) {
    if (sgn(t) < 0 || t > 1) throw PreconditionError("dilation_path: t outside [0,1]");
    if (!has_unit_determinant(m)) throw PreconditionError("dilation_path: det(M) is not exactly 1");
    return dilate(m, Rational(1 - t));
}

ConstantMatrix constant_part(const SeriesMatrix& m) {
    ConstantMatrix c(m.n());
    const Monomial origin(m.dim());
    for (std::size_t i = 0; i < m.n(); ++i)
        for (std::size_t j = 0; j < m.n(); ++j) c(i, j) = m(i, j).coefficient(origin).to_complex();
    return c;
}

ConstantMatrix Transvection::matrix(std::size_t n) const {
    if (i == j || i >= n || j >= n) throw PreconditionError("transvection indices must be distinct and in range");
    ConstantMatrix m = ConstantMatrix::identity(n);
    m(i, j) = alpha;
    return m;
}

ConstantMatrix product(std::span<const Transvection> factors, std::size_t n) {
    ConstantMatrix out = ConstantMatrix::identity(n);
    for (const auto& t : factors) {
        // Right multiplication by I + alpha e_ij adds alpha * column i to column j.
        for (std::size_t r = 0; r < n; ++r) out(r, t.j) += t.alpha * out(r, t.i);
    }
    return out;
}

std::vector<Transvection> factor_constant_sl(const ConstantMatrix& c, double tol) {
    const std::size_t n = c.n();
    if (std::abs(determinant(c) - 1.0) >= tol)
        throw PreconditionError("factor_constant_sl: |det C - 1| is not below the tolerance");

    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) scale = std::max(scale, std::abs(c(i, j)));
    const double tiny = 64 * std::numeric_limits<double>::epsilon() * std::max(scale, 1.0);

    ConstantMatrix a = c;
    std::vector<Transvection> ops; // applied on the left, in order
    auto row_op = [&](std::size_t i, std::size_t j, std::complex<double> alpha) {
        if (alpha == 0.0) return;
        for (std::size_t k = 0; k < n; ++k) a(i, k) += alpha * a(j, k);
        ops.push_back({i, j, alpha});
    };

    // Forward elimination. A weak pivot is strengthened by adding the strongest
    // row below it with sign +-1, so that |pivot| >= |that row's entry|.
    for (std::size_t j = 0; j + 1 < n; ++j) {
        std::size_t best = j;
        for (std::size_t r = j + 1; r < n; ++r)
            if (std::abs(a(r, j)) > std::abs(a(best, j))) best = r;
        if (best != j && std::abs(a(j, j)) < std::abs(a(best, j))) {
            const double sign = std::abs(a(j, j) + a(best, j)) >= std::abs(a(j, j) - a(best, j)) ? 1.0 : -1.0;
            row_op(j, best, sign);
        }
        if (std::abs(a(j, j)) <= tiny)
            throw NumericalBreakdown("factor_constant_sl: pivot " + std::to_string(std::abs(a(j, j))) +
                                     " in column " + std::to_string(j + 1) + " is numerically zero");
        for (std::size_t r = j + 1; r < n; ++r) {
            row_op(r, j, -a(r, j) / a(j, j));
            a(r, j) = 0.0;
        }
    }
    if (std::abs(a(n - 1, n - 1)) <= tiny)
        throw NumericalBreakdown("factor_constant_sl: last pivot is numerically zero");

    // Back substitution down to a diagonal matrix.
    for (std::size_t j = n; j-- > 1;)
        for (std::size_t r = 0; r < j; ++r) {
            row_op(r, j, -a(r, j) / a(j, j));
            a(r, j) = 0.0;
        }

    // diag(a, b) -> diag(1, ab) with four transvections, sweeping the determinant
    // into the last slot.
    for (std::size_t j = 0; j + 1 < n; ++j) {
        const auto x = a(j, j);
        const auto y = a(j + 1, j + 1);
        if (x == 1.0) continue;
        row_op(j + 1, j, 1.0 / x);
        row_op(j, j + 1, 1.0 - x);
        row_op(j + 1, j, -1.0);
        row_op(j, j + 1, -(1.0 - x) / x);
        a(j, j) = 1.0;
        a(j, j + 1) = 0.0;
        a(j + 1, j) = 0.0;
        a(j + 1, j + 1) = x * y;
    }

    // E_k ... E_1 C = I, hence C = E_1^{-1} ... E_k^{-1}.
    std::vector<Transvection> factors;
    factors.reserve(ops.size());
    for (const auto& op : ops) factors.push_back({op.i, op.j, -op.alpha});

    const double error = max_entry_distance(product(factors, n), c);
    if (!(error < tol))
        throw NumericalBreakdown("factor_constant_sl: reconstruction error " + std::to_string(error) +
                                 " exceeds the tolerance");
    return factors;
}

std::vector<HomotopySample> full_homotopy_sample(const SeriesMatrix& m, unsigned num_steps, double tol) {
    if (num_steps < 2) throw PreconditionError("full_homotopy_sample: need at least 2 samples");
    if (!has_unit_determinant(m)) throw PreconditionError("full_homotopy_sample: det(M) is not exactly 1");
    const auto factors = factor_constant_sl(constant_part(m), tol);

    std::vector<HomotopySample> samples;
    samples.reserve(num_steps);
    for (unsigned k = 0; k < num_steps; ++k) {
        const Rational t = ratio(k, num_steps - 1);
        std::optional<SeriesMatrix> at;
        if (2 * t <= 1) {
            at = dilation_path(m, Rational(2 * t));
        } else {
            const double shrink = 1.0 - to_double(Rational(2 * t - 1));
            std::vector<Transvection> scaled(factors);
            for (auto& f : scaled) f.alpha *= shrink;
            at = SeriesMatrix::constant(product(scaled, m.n()), m.dim(), m.cap());
        }
        const auto residual =
            subtract(det(*at), TruncatedSeries::constant(m.dim(), m.cap(), ComplexRational(1)));
        samples.push_back({to_double(t), *at, to_double(wiener_norm(residual).upper), op_norm_bound(*at)});
    }
    return samples;
}

} // namespace polysym
