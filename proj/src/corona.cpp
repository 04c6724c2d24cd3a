#include "polysym/corona.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "polysym/errors.hpp"
#include "polysym/symmetry.hpp"

namespace polysym {

namespace {

void require_uniform_dim(std::span<const TruncatedSeries> fs, const char* what) {
    for (const auto& f : fs)
        if (f.dim() != fs.front().dim())
            throw DimensionMismatch(std::string(what) + ": series of different dimensions");
}

void require_pairing(std::span<const TruncatedSeries> fs, std::span<const TruncatedSeries> gs) {
    if (fs.empty()) throw PreconditionError("corona data must contain at least one function");
    if (fs.size() != gs.size())
        throw DimensionMismatch("corona data has " + std::to_string(fs.size()) + " functions but " +
                                std::to_string(gs.size()) + " solution entries");
    require_uniform_dim(fs, "corona data");
    require_uniform_dim(gs, "corona solution");
    if (fs.front().dim() != gs.front().dim()) throw DimensionMismatch("data and solution dimensions differ");
}

} // namespace

void CoronaData::validate() const {
    if (fs.empty()) throw PreconditionError("corona data must contain at least one function");
    require_uniform_dim(fs, "corona data");
    if (gs) require_pairing(fs, *gs);
}

double corona_delta(std::span<const TruncatedSeries> fs, unsigned resolution, unsigned radial_layers) {
    if (fs.empty()) throw PreconditionError("corona data must contain at least one function");
    if (resolution == 0 || radial_layers == 0)
        throw PreconditionError("corona_delta: resolution and radial layers must be at least 1");
    require_uniform_dim(fs, "corona data");
    const std::size_t d = fs.front().dim();

    std::vector<std::complex<double>> roots(resolution);
    for (unsigned k = 0; k < resolution; ++k) roots[k] = std::polar(1.0, 2.0 * std::numbers::pi * k / resolution);

    double best = std::numeric_limits<double>::infinity();
    std::vector<unsigned> index(d);
    Point z(d);
    for (unsigned layer = 1; layer <= radial_layers; ++layer) {
        const double r = static_cast<double>(layer) / radial_layers;
        std::fill(index.begin(), index.end(), 0U);
        while (true) {
            for (std::size_t k = 0; k < d; ++k) z[k] = r * roots[index[k]];
            double total = 0.0;
            for (const auto& f : fs) total += std::abs(evaluate(f, z).value);
            best = std::min(best, total);

            std::size_t k = 0;
            while (k < d && ++index[k] == resolution) index[k++] = 0;
            if (k == d) break;
        }
    }
    return best;
}

NormEnclosure verify_bezout(std::span<const TruncatedSeries> fs, std::span<const TruncatedSeries> gs) {
    require_pairing(fs, gs);
    std::optional<TruncatedSeries> total;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        auto product = multiply(fs[i], gs[i]);
        total = total ? add(*total, product) : product;
    }
    const auto one = TruncatedSeries::constant(total->dim(), total->cap(), ComplexRational(1));
    return wiener_norm(subtract(*total, one));
}

std::vector<TruncatedSeries> symmetrize_solution(std::span<const TruncatedSeries> fs,
                                                 std::span<const TruncatedSeries> gs) {
    require_pairing(fs, gs);
    for (std::size_t i = 0; i < fs.size(); ++i)
        if (!is_symmetric(fs[i]))
            throw PreconditionError("symmetrize_solution: f_" + std::to_string(i + 1) + " is not symmetric");
    if (sgn(verify_bezout(fs, gs).upper) != 0)
        throw PreconditionError("symmetrize_solution: the given solution does not satisfy the Bezout identity exactly");

    std::vector<TruncatedSeries> out;
    out.reserve(gs.size());
    for (const auto& g : gs) out.push_back(symmetrize(g));
    if (sgn(verify_bezout(fs, out).upper) != 0)
        throw std::logic_error("symmetrize_solution: symmetrized solution lost the Bezout identity");
    return out;
}

Rational delta_from_solution(std::span<const TruncatedSeries> gs) {
    Rational largest = 0;
    for (const auto& g : gs) largest = std::max(largest, wiener_norm(g).upper);
    if (sgn(largest) == 0) throw PreconditionError("delta_from_solution: all solution entries are zero");
    return Rational(1) / largest;
}

} // namespace polysym
