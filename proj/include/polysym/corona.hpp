#pragma once

// Corona data f_1..f_n and candidate Bezout solutions g_1..g_n with
// f_1 g_1 + ... + f_n g_n = 1.

#include <optional>
#include <span>
#include <vector>

#include "polysym/series.hpp"

namespace polysym {

struct CoronaData {
    std::vector<TruncatedSeries> fs;
    std::optional<std::vector<TruncatedSeries>> gs;

    /// Throws DimensionMismatch on ragged lengths or mixed dimensions.
    void validate() const;
};

/// min of sum_i |f_i(r z)| over r in {1/L, ..., 1} and z on the resolution^d torus grid.
/// Sampling only: an upper estimate of the infimum, never a certified lower bound.
double corona_delta(std::span<const TruncatedSeries> fs, unsigned resolution, unsigned radial_layers);

/// Enclosure of ||f_1 g_1 + ... + f_n g_n - 1||_1.
NormEnclosure verify_bezout(std::span<const TruncatedSeries> fs, std::span<const TruncatedSeries> gs);

/// g~_i = symmetrize(g_i). Requires symmetric f_i and an exactly zero residual;
/// the result again has an exactly zero residual.
std::vector<TruncatedSeries> symmetrize_solution(std::span<const TruncatedSeries> fs,
                                                 std::span<const TruncatedSeries> gs);

/// (max_i upper ||g_i||_1)^{-1}. The l1 norm majorizes the sup norm, so this is a
/// valid (possibly smaller) delta for the corona condition.
Rational delta_from_solution(std::span<const TruncatedSeries> gs);

} // namespace polysym
