#include "polysym/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "polysym/errors.hpp"

namespace polysym {

namespace {

bool coordinate_less(const std::complex<double>& a, const std::complex<double>& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

void require_same_length(std::size_t a, std::size_t b, const char* op) {
    if (a != b)
        throw DimensionMismatch(std::string(op) + ": lengths " + std::to_string(a) + " and " + std::to_string(b) +
                                " differ");
}

} // namespace

Permutation::Permutation(std::vector<std::size_t> one_based_images) {
    const std::size_t d = one_based_images.size();
    std::vector<bool> seen(d, false);
    images_.reserve(d);
    for (auto v : one_based_images) {
        if (v < 1 || v > d || seen[v - 1]) throw PreconditionError("image list is not a permutation of 1..d");
        seen[v - 1] = true;
        images_.push_back(v - 1);
    }
}

Permutation Permutation::identity(std::size_t d) {
    Permutation p;
    p.images_.resize(d);
    std::iota(p.images_.begin(), p.images_.end(), std::size_t{0});
    return p;
}

Permutation Permutation::adjacent_transposition(std::size_t d, std::size_t k) {
    if (k + 1 >= d) throw PreconditionError("adjacent transposition index out of range");
    Permutation p = identity(d);
    std::swap(p.images_[k], p.images_[k + 1]);
    return p;
}

std::vector<Permutation> Permutation::all(std::size_t d) {
    std::vector<Permutation> out;
    Permutation p = identity(d);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.images_.begin(), p.images_.end()));
    return out;
}

std::vector<std::size_t> Permutation::one_based() const {
    std::vector<std::size_t> out(images_);
    for (auto& v : out) ++v;
    return out;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    require_same_length(a.size(), b.size(), "compose");
    Permutation out;
    out.images_.resize(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) out.images_[k] = a.images_[b.images_[k]];
    return out;
}

Point apply_perm_point(const Permutation& sigma, std::span<const std::complex<double>> z) {
    require_same_length(sigma.size(), z.size(), "apply_perm_point");
    Point out(z.size());
    for (std::size_t k = 0; k < z.size(); ++k) out[k] = z[sigma(k)];
    return out;
}

TruncatedSeries apply_perm_series(const Permutation& sigma, const TruncatedSeries& f) {
    require_same_length(sigma.size(), f.dim(), "apply_perm_series");
    // f(sigma z) = sum c_n prod_k z_{sigma(k)}^{n_k}: exponent n_k moves to slot sigma(k).
    TermMap out;
    for (const auto& [m, c] : f.terms()) {
        Monomial moved(f.dim());
        for (std::size_t k = 0; k < f.dim(); ++k) moved.exps[sigma(k)] = m.exps[k];
        out.emplace(std::move(moved), c);
    }
    return TruncatedSeries::from_terms(f.dim(), f.cap(), std::move(out), f.tail_bound());
}

TruncatedSeries symmetrize(const TruncatedSeries& f) {
    // Averaging over S_d sends z^n to the mean of the distinct rearrangements of n,
    // each hit d!/|orbit| times.
    TermMap out;
    for (const auto& [m, c] : f.terms()) {
        auto exps = m.exps;
        std::sort(exps.begin(), exps.end());
        std::vector<Monomial> arrangements;
        do {
            arrangements.emplace_back(exps);
        } while (std::next_permutation(exps.begin(), exps.end()));
        const ComplexRational share = c * ratio(1, arrangements.size());
        for (auto& a : arrangements) {
            auto [it, inserted] = out.try_emplace(std::move(a), share);
            if (!inserted) it->second += share;
        }
    }
    return TruncatedSeries::from_terms(f.dim(), f.cap(), std::move(out), f.tail_bound());
}

bool is_symmetric(const TruncatedSeries& f) {
    for (std::size_t k = 0; k + 1 < f.dim(); ++k)
        if (!(apply_perm_series(Permutation::adjacent_transposition(f.dim(), k), f).terms() == f.terms()))
            return false;
    return true;
}

Point canonical(std::span<const std::complex<double>> z) {
    Point out(z.begin(), z.end());
    std::sort(out.begin(), out.end(), coordinate_less);
    return out;
}

OrbitPoint OrbitPoint::from(Point z) {
    constexpr double limit = 1.0 + 4 * std::numeric_limits<double>::epsilon();
    for (const auto& c : z)
        if (!(std::abs(c) <= limit)) throw PreconditionError("point lies outside the closed polydisc");
    OrbitPoint p;
    p.canonical = polysym::canonical(z);
    p.rep = std::move(z);
    return p;
}

std::vector<Point> orbit(std::span<const std::complex<double>> z) {
    // Distinct rearrangements of the sorted coordinates are exactly the orbit.
    Point sorted = canonical(z);
    std::vector<Point> out;
    do {
        out.push_back(sorted);
    } while (std::next_permutation(sorted.begin(), sorted.end(), coordinate_less));
    return out;
}

double quotient_dist(std::span<const std::complex<double>> z, std::span<const std::complex<double>> w) {
    require_same_length(z.size(), w.size(), "quotient_dist");
    double best = std::numeric_limits<double>::infinity();
    for (const auto& sigma : Permutation::all(z.size())) {
        double worst = 0.0;
        for (std::size_t k = 0; k < z.size() && worst < best; ++k)
            worst = std::max(worst, std::abs(z[sigma(k)] - w[k]));
        best = std::min(best, worst);
    }
    return z.empty() ? 0.0 : best;
}

std::vector<std::complex<double>> elementary_values(std::span<const std::complex<double>> z) {
    // Coefficients of prod_k (1 + z_k t).
    std::vector<std::complex<double>> e(z.size() + 1, 0.0);
    e[0] = 1.0;
    for (std::size_t k = 0; k < z.size(); ++k)
        for (std::size_t j = k + 1; j >= 1; --j) e[j] += e[j - 1] * z[k];
    e.erase(e.begin());
    return e;
}

std::optional<std::size_t> separating_elementary(std::span<const std::complex<double>> z,
                                                 std::span<const std::complex<double>> w, double tol) {
    require_same_length(z.size(), w.size(), "separating_elementary");
    const auto ez = elementary_values(z);
    const auto ew = elementary_values(w);
    for (std::size_t k = 0; k < ez.size(); ++k)
        if (std::abs(ez[k] - ew[k]) > tol) return k + 1;
    return std::nullopt;
}

OrbitPoint contraction_homotopy(double t, std::span<const std::complex<double>> z) {
    if (!(t >= 0.0 && t <= 1.0)) throw PreconditionError("contraction_homotopy: t outside [0,1]");
    Point scaled(z.begin(), z.end());
    for (auto& c : scaled) c *= (1.0 - t);
    return OrbitPoint::from(std::move(scaled));
}

} // namespace polysym
