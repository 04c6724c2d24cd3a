#pragma once

// Concrete witnesses: the Blaschke-product ideal chain and the worked example
// f = sum_n (z^2 + w^2)^n / (n^2 2^n) in two variables.

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "polysym/elementary.hpp"
#include "polysym/series.hpp"

namespace polysym {

enum class AlphaRule {
    varying_alpha_k, ///< factor k uses alpha_k
    fixed_alpha_n,   ///< every factor uses alpha_n
};

struct BlaschkeSpec {
    unsigned n = 1;
    AlphaRule rule = AlphaRule::varying_alpha_k;
};

/// alpha_k = 1 - 1/k^2.
double blaschke_alpha(unsigned k);

/// B_n(z) = prod_{k=1}^n (a_k - z)/(1 - a_k z). Throws PreconditionError for |z| > 1.
std::complex<double> blaschke_eval(const BlaschkeSpec& spec, std::complex<double> z);

/// Distinct zeros of B_n, ascending.
std::vector<double> blaschke_zeros(const BlaschkeSpec& spec);

struct ChainWitness {
    unsigned n = 1;
    unsigned d = 1;
    AlphaRule rule = AlphaRule::varying_alpha_k;
    /// max |F_n| over the torus grid, F_n(z) = B_n(z_1) ... B_n(z_d)
    double max_modulus = 0.0;
    bool modulus_ok = false;
    /// max |F_n| at the diagonal tuples (a, ..., a), a a zero of B_n
    double own_zero_residual = 0.0;
    bool vanishes_ok = false;
    /// min |F_n| at diagonal tuples built from zeros of B_{n+1} that are not zeros of B_n
    double next_zero_min_modulus = 0.0;
    bool strict_ok = false;
    std::string note;
};

ChainWitness blaschke_chain_witness(unsigned n, unsigned d, unsigned resolution, AlphaRule rule);

/// Exact partial sum f_N = sum_{n=1}^N (z^2 + w^2)^n / (n^2 2^n). Requires cap >= 2N.
TruncatedSeries paper_example_series(unsigned N, unsigned cap);

struct PaperExampleReport {
    unsigned N = 0;
    unsigned cap = 0;
    TruncatedSeries f{2, 0};
    NormEnclosure norm;
    /// sum_{n=1}^N 1/n^2
    Rational expected_norm;
    ElementarySeries elementary{2, 0};
    double composition_deviation = 0.0;
    std::size_t points = 0;
};

/// Builds f_N, its Wiener norm, its elementary-basis rewrite, and the composition
/// deviation on `points` seeded random points of the disc of radius 0.7 squared.
PaperExampleReport paper_example(unsigned N, unsigned cap, std::uint64_t seed = 0, std::size_t points = 100);

} // namespace polysym
