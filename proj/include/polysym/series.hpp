#pragma once

// Exact truncated multivariate power series over the complex rationals, with the
// Wiener (l1) norm, point evaluation, dilation and the diagonal restriction / mean
// lift pair between one and d variables.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "polysym/rational.hpp"

namespace polysym {

/// Exponent vector (n_1, ..., n_d) of z_1^{n_1} ... z_d^{n_d}.
struct Monomial {
    std::vector<std::uint32_t> exps;

    Monomial() = default;
    explicit Monomial(std::size_t dim) : exps(dim, 0) {}
    Monomial(std::initializer_list<std::uint32_t> e) : exps(e) {}
    explicit Monomial(std::vector<std::uint32_t> e) : exps(std::move(e)) {}

    std::size_t dim() const { return exps.size(); }
    std::uint64_t degree() const;

    static Monomial unit(std::size_t dim, std::size_t k, std::uint32_t power = 1);

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded order used for storage and output: total degree ascending, then
/// exponent vectors descending lexicographically (1, z, w, z^2, zw, w^2, ...).
struct GradedOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Graded-lex comparison where the larger monomial leads: higher degree wins,
/// ties broken by the lexicographically larger exponent vector.
bool graded_lex_less(const Monomial& a, const Monomial& b);

using TermMap = std::map<Monomial, ComplexRational, GradedOrder>;

struct NormEnclosure {
    Rational lower{0};
    Rational upper{0};
    bool exact = true;
};

class TruncatedSeries {
public:
    /// Zero series.
    TruncatedSeries(std::size_t dim, unsigned cap);

    /// Merges duplicates, drops zeros and moves terms above `cap` into the tail bound.
    /// Throws DimensionMismatch when a monomial has the wrong length.
    static TruncatedSeries make(std::size_t dim, unsigned cap,
                                std::span<const std::pair<Monomial, ComplexRational>> terms);

    /// Same as make() for an already-merged map; `tail` is added to the mass of any
    /// truncated terms.
    static TruncatedSeries from_terms(std::size_t dim, unsigned cap, TermMap terms,
                                      std::optional<Rational> tail = std::nullopt);

    static TruncatedSeries constant(std::size_t dim, unsigned cap, const ComplexRational& c);
    /// z_{k+1} (0-based k).
    static TruncatedSeries variable(std::size_t dim, unsigned cap, std::size_t k);

    std::size_t dim() const { return dim_; }
    unsigned cap() const { return cap_; }
    const TermMap& terms() const { return terms_; }
    const std::optional<Rational>& tail_bound() const { return tail_; }

    /// Tail value with "absent" read as 0.
    Rational tail_value() const { return tail_ ? *tail_ : Rational(0); }
    bool is_polynomial() const { return !tail_ || sgn(*tail_) == 0; }
    bool is_zero() const { return terms_.empty() && is_polynomial(); }

    ComplexRational coefficient(const Monomial& m) const;
    /// Highest stored total degree, 0 for the zero series.
    std::uint64_t degree() const;

    /// Copy with a different cap (lowering it truncates into the tail).
    TruncatedSeries with_cap(unsigned cap) const;

    /// Value equality: dimension, stored terms and tail value. The cap is a
    /// truncation parameter and does not take part.
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

private:
    std::size_t dim_;
    unsigned cap_;
    TermMap terms_;
    std::optional<Rational> tail_;
};

TruncatedSeries add(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries subtract(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries negate(const TruncatedSeries& f);
TruncatedSeries scale(const TruncatedSeries& f, const ComplexRational& c);
TruncatedSeries multiply(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries power(const TruncatedSeries& f, unsigned exponent);

inline TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& g) { return add(f, g); }
inline TruncatedSeries operator-(const TruncatedSeries& f, const TruncatedSeries& g) { return subtract(f, g); }
inline TruncatedSeries operator-(const TruncatedSeries& f) { return negate(f); }
inline TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g) { return multiply(f, g); }

/// Certified enclosure of ||f||_1 = sum |c_n|. Exact on the real-coefficient path.
NormEnclosure wiener_norm(const TruncatedSeries& f);

struct Evaluation {
    std::complex<double> value;
    /// Tail bound plus a rounding term; valid for points of the closed polydisc.
    double error_bound = 0.0;
};

Evaluation evaluate(const TruncatedSeries& f, std::span<const std::complex<double>> z);

/// max |f| over the grid {exp(2 pi i k / resolution)}^d of the distinguished torus.
double sup_norm_lower(const TruncatedSeries& f, unsigned resolution);

/// f(r z): coefficient c_n becomes c_n r^{|n|}. Requires 0 <= r <= 1.
TruncatedSeries dilate(const TruncatedSeries& f, const Rational& r);

/// (Df)(z) = f(z, ..., z) as a one-variable series.
TruncatedSeries diagonal_D(const TruncatedSeries& f);

/// (Ug)(z_1, ..., z_d) = g((z_1 + ... + z_d) / d) for a one-variable g.
TruncatedSeries lift_U(const TruncatedSeries& g, std::size_t d);

} // namespace polysym
