#include "polysym/witnesses.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "polysym/errors.hpp"
#include "polysym/symmetry.hpp"

namespace polysym {

double blaschke_alpha(unsigned k) {
    if (k == 0) throw PreconditionError("blaschke_alpha: k must be positive");
    const double kk = static_cast<double>(k);
    return 1.0 - 1.0 / (kk * kk);
}

std::complex<double> blaschke_eval(const BlaschkeSpec& spec, std::complex<double> z) {
    if (spec.n == 0) throw PreconditionError("Blaschke product needs n >= 1");
    if (std::abs(z) > 1.0 + 1e-12) throw PreconditionError("blaschke_eval: |z| > 1");
    std::complex<double> value = 1.0;
    for (unsigned k = 1; k <= spec.n; ++k) {
        const double a = blaschke_alpha(spec.rule == AlphaRule::fixed_alpha_n ? spec.n : k);
        value *= (a - z) / (1.0 - a * z);
    }
    return value;
}

std::vector<double> blaschke_zeros(const BlaschkeSpec& spec) {
    if (spec.rule == AlphaRule::fixed_alpha_n) return {blaschke_alpha(spec.n)};
    std::vector<double> zeros;
    for (unsigned k = 1; k <= spec.n; ++k) zeros.push_back(blaschke_alpha(k));
    return zeros;
}

namespace {

std::complex<double> chain_product(const BlaschkeSpec& spec, std::span<const std::complex<double>> z) {
    std::complex<double> value = 1.0;
    for (auto c : z) value *= blaschke_eval(spec, c);
    return value;
}

} // namespace

ChainWitness blaschke_chain_witness(unsigned n, unsigned d, unsigned resolution, AlphaRule rule) {
    if (n == 0 || d == 0 || resolution == 0)
        throw PreconditionError("blaschke_chain_witness: n, d and resolution must be positive");
    ChainWitness w;
    w.n = n;
    w.d = d;
    w.rule = rule;
    const BlaschkeSpec spec{n, rule};
    const BlaschkeSpec next{n + 1, rule};

    std::vector<std::complex<double>> roots(resolution);
    for (unsigned k = 0; k < resolution; ++k) roots[k] = std::polar(1.0, 2.0 * std::numbers::pi * k / resolution);
    std::vector<unsigned> index(d, 0);
    Point z(d);
    while (true) {
        for (unsigned k = 0; k < d; ++k) z[k] = roots[index[k]];
        w.max_modulus = std::max(w.max_modulus, std::abs(chain_product(spec, z)));
        unsigned k = 0;
        while (k < d && ++index[k] == resolution) index[k++] = 0;
        if (k == d) break;
    }
    w.modulus_ok = w.max_modulus <= 1.0 + 1e-9;

    for (double a : blaschke_zeros(spec)) {
        const Point tuple(d, a);
        w.own_zero_residual = std::max(w.own_zero_residual, std::abs(chain_product(spec, tuple)));
    }
    w.vanishes_ok = w.own_zero_residual <= 1e-12;

    const auto own = blaschke_zeros(spec);
    w.next_zero_min_modulus = std::numeric_limits<double>::infinity();
    bool any_new = false;
    for (double a : blaschke_zeros(next)) {
        const bool shared = std::any_of(own.begin(), own.end(), [&](double b) { return std::abs(a - b) <= 1e-15; });
        if (shared) continue;
        any_new = true;
        const Point tuple(d, a);
        w.next_zero_min_modulus = std::min(w.next_zero_min_modulus, std::abs(chain_product(spec, tuple)));
    }
    if (!any_new) w.next_zero_min_modulus = 0.0;
    w.strict_ok = any_new && w.next_zero_min_modulus > 1e-12;

    w.note = rule == AlphaRule::fixed_alpha_n
                 ? "literal reading: every factor of B_n uses alpha_n = 1 - 1/n^2"
                 : "varying reading: factor k of B_n uses alpha_k = 1 - 1/k^2 (the printed product repeats alpha_n)";
    return w;
}

TruncatedSeries paper_example_series(unsigned N, unsigned cap) {
    if (cap < 2 * N) throw PreconditionError("paper example needs cap >= 2N");
    const auto z = TruncatedSeries::variable(2, cap, 0);
    const auto w = TruncatedSeries::variable(2, cap, 1);
    const auto base = add(multiply(z, z), multiply(w, w));

    TruncatedSeries f(2, cap);
    TruncatedSeries base_power = TruncatedSeries::constant(2, cap, ComplexRational(1));
    for (unsigned n = 1; n <= N; ++n) {
        base_power = multiply(base_power, base);
        mpz_class denominator;
        mpz_ui_pow_ui(denominator.get_mpz_t(), 2, n);
        denominator *= static_cast<unsigned long>(n) * n;
        f = add(f, scale(base_power, ComplexRational(Rational(mpz_class(1), denominator))));
    }
    return f;
}

PaperExampleReport paper_example(unsigned N, unsigned cap, std::uint64_t seed, std::size_t points) {
    PaperExampleReport r;
    r.N = N;
    r.cap = cap;
    r.f = paper_example_series(N, cap);
    r.norm = wiener_norm(r.f);
    r.expected_norm = 0;
    for (unsigned n = 1; n <= N; ++n) r.expected_norm += ratio(1, static_cast<unsigned long>(n) * n);
    r.elementary = series_to_elementary(r.f, cap);

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Point> sample;
    sample.reserve(points);
    for (std::size_t p = 0; p < points; ++p) {
        Point z(2);
        for (auto& c : z) c = std::polar(0.7 * std::sqrt(unit(rng)), 2.0 * std::numbers::pi * unit(rng));
        sample.push_back(std::move(z));
    }
    r.points = points;
    r.composition_deviation = compare_composition(r.f, r.elementary, sample);
    return r;
}

} // namespace polysym
