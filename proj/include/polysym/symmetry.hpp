#pragma once

// The S_d action on points and series, the averaging projector, and the
// geometry of the orbit space of the closed polydisc.

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "polysym/series.hpp"

namespace polysym {

using Point = std::vector<std::complex<double>>;

/// A bijection of {1, ..., d}. Stored 0-based; constructed and printed 1-based.
class Permutation {
public:
    /// Throws PreconditionError unless `one_based_images` lists 1..d exactly once.
    explicit Permutation(std::vector<std::size_t> one_based_images);

    static Permutation identity(std::size_t d);
    /// Swaps positions k and k+1 (0-based k).
    static Permutation adjacent_transposition(std::size_t d, std::size_t k);
    /// All d! permutations in lexicographic order of their image lists.
    static std::vector<Permutation> all(std::size_t d);

    std::size_t size() const { return images_.size(); }
    /// 0-based image of 0-based k.
    std::size_t operator()(std::size_t k) const { return images_[k]; }
    std::vector<std::size_t> one_based() const;

    /// a ∘ b: k -> a(b(k)).
    friend Permutation compose(const Permutation& a, const Permutation& b);
    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    Permutation() = default;
    std::vector<std::size_t> images_;
};

/// (sigma z)_k = z_{sigma(k)}.
Point apply_perm_point(const Permutation& sigma, std::span<const std::complex<double>> z);

/// sigma f with (sigma f)(z) = f(sigma z). With this convention
/// apply(compose(a, b), f) == apply(a, apply(b, f)).
TruncatedSeries apply_perm_series(const Permutation& sigma, const TruncatedSeries& f);

/// (1/d!) sum over S_d of sigma f, computed exactly.
TruncatedSeries symmetrize(const TruncatedSeries& f);

bool is_symmetric(const TruncatedSeries& f);

/// Coordinates sorted by (Re, Im).
Point canonical(std::span<const std::complex<double>> z);

struct OrbitPoint {
    Point rep;
    Point canonical;

    /// Throws PreconditionError if a coordinate lies outside the closed unit disc.
    static OrbitPoint from(Point z);
};

/// {sigma z : sigma in S_d} without exact duplicates, in canonical (sorted) order.
std::vector<Point> orbit(std::span<const std::complex<double>> z);

/// min over sigma of max_k |z_{sigma(k)} - w_k|.
double quotient_dist(std::span<const std::complex<double>> z, std::span<const std::complex<double>> w);

/// e_1(z), ..., e_d(z) in floating point.
std::vector<std::complex<double>> elementary_values(std::span<const std::complex<double>> z);

/// Smallest 1-based k with |e_k(z) - e_k(w)| > tol, if any.
std::optional<std::size_t> separating_elementary(std::span<const std::complex<double>> z,
                                                 std::span<const std::complex<double>> w, double tol);

/// H(t, [z]) = [(1 - t) z]. Requires 0 <= t <= 1.
OrbitPoint contraction_homotopy(double t, std::span<const std::complex<double>> z);

constexpr double default_orbit_tolerance = 1e-9;

} // namespace polysym
