#include "polysym/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "polysym/errors.hpp"

namespace polysym {

std::uint64_t Monomial::degree() const {
    std::uint64_t total = 0;
    for (auto e : exps) total += e;
    return total;
}

Monomial Monomial::unit(std::size_t dim, std::size_t k, std::uint32_t power) {
    Monomial m(dim);
    m.exps.at(k) = power;
    return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out(a.exps);
    for (std::size_t k = 0; k < out.exps.size(); ++k) out.exps[k] += b.exps[k];
    return out;
}

bool GradedOrder::operator()(const Monomial& a, const Monomial& b) const {
    auto da = a.degree();
    auto db = b.degree();
    if (da != db) return da < db;
    return b.exps < a.exps;
}

bool graded_lex_less(const Monomial& a, const Monomial& b) {
    auto da = a.degree();
    auto db = b.degree();
    if (da != db) return da < db;
    return a.exps < b.exps;
}

namespace {

void require_same_dim(const TruncatedSeries& f, const TruncatedSeries& g, const char* op) {
    if (f.dim() != g.dim())
        throw DimensionMismatch(std::string(op) + ": dimensions " + std::to_string(f.dim()) + " and " +
                                std::to_string(g.dim()) + " differ");
}

void accumulate(TermMap& into, const Monomial& m, const ComplexRational& c) {
    auto [it, inserted] = into.try_emplace(m, c);
    if (!inserted) it->second += c;
}

} // namespace

TruncatedSeries::TruncatedSeries(std::size_t dim, unsigned cap) : dim_(dim), cap_(cap) {
    if (dim == 0) throw PreconditionError("series dimension must be positive");
}

TruncatedSeries TruncatedSeries::make(std::size_t dim, unsigned cap,
                                      std::span<const std::pair<Monomial, ComplexRational>> terms) {
    TermMap merged;
    for (const auto& [m, c] : terms) {
        if (m.dim() != dim)
            throw DimensionMismatch("monomial of length " + std::to_string(m.dim()) + " in a series of dimension " +
                                    std::to_string(dim));
        accumulate(merged, m, c);
    }
    return from_terms(dim, cap, std::move(merged));
}

TruncatedSeries TruncatedSeries::from_terms(std::size_t dim, unsigned cap, TermMap terms,
                                            std::optional<Rational> tail) {
    TruncatedSeries out(dim, cap);
    if (tail && sgn(*tail) < 0) throw PreconditionError("tail bound must be non-negative");
    Rational dropped = 0;
    bool truncated = false;
    for (auto it = terms.begin(); it != terms.end();) {
        if (it->first.dim() != dim)
            throw DimensionMismatch("monomial of length " + std::to_string(it->first.dim()) +
                                    " in a series of dimension " + std::to_string(dim));
        if (it->second.is_zero()) {
            it = terms.erase(it);
        } else if (it->first.degree() > cap) {
            dropped += it->second.rect_abs();
            truncated = true;
            it = terms.erase(it);
        } else {
            ++it;
        }
    }
    out.terms_ = std::move(terms);
    if (tail || truncated) out.tail_ = (tail ? *tail : Rational(0)) + dropped;
    return out;
}

TruncatedSeries TruncatedSeries::constant(std::size_t dim, unsigned cap, const ComplexRational& c) {
    TermMap t;
    t.emplace(Monomial(dim), c);
    return from_terms(dim, cap, std::move(t));
}

TruncatedSeries TruncatedSeries::variable(std::size_t dim, unsigned cap, std::size_t k) {
    if (k >= dim) throw DimensionMismatch("variable index " + std::to_string(k + 1) + " exceeds dimension");
    TermMap t;
    t.emplace(Monomial::unit(dim, k), ComplexRational(1));
    return from_terms(dim, cap, std::move(t));
}

ComplexRational TruncatedSeries::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? ComplexRational() : it->second;
}

std::uint64_t TruncatedSeries::degree() const {
    return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

TruncatedSeries TruncatedSeries::with_cap(unsigned cap) const { return from_terms(dim_, cap, terms_, tail_); }

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_ && a.tail_value() == b.tail_value();
}

TruncatedSeries add(const TruncatedSeries& f, const TruncatedSeries& g) {
    require_same_dim(f, g, "add");
    TermMap sum = f.terms();
    for (const auto& [m, c] : g.terms()) accumulate(sum, m, c);
    std::optional<Rational> tail;
    if (f.tail_bound() || g.tail_bound()) tail = f.tail_value() + g.tail_value();
    return TruncatedSeries::from_terms(f.dim(), std::min(f.cap(), g.cap()), std::move(sum), std::move(tail));
}

TruncatedSeries negate(const TruncatedSeries& f) { return scale(f, ComplexRational(-1)); }

TruncatedSeries subtract(const TruncatedSeries& f, const TruncatedSeries& g) { return add(f, negate(g)); }

TruncatedSeries scale(const TruncatedSeries& f, const ComplexRational& c) {
    TermMap out;
    for (const auto& [m, v] : f.terms()) out.emplace(m, v * c);
    std::optional<Rational> tail;
    if (f.tail_bound()) tail = f.tail_value() * c.rect_abs();
    return TruncatedSeries::from_terms(f.dim(), f.cap(), std::move(out), std::move(tail));
}

TruncatedSeries multiply(const TruncatedSeries& f, const TruncatedSeries& g) {
    require_same_dim(f, g, "multiply");
    const unsigned cap = std::min(f.cap(), g.cap());
    TermMap product;
    for (const auto& [mf, cf] : f.terms())
        for (const auto& [mg, cg] : g.terms()) accumulate(product, mf * mg, cf * cg);

    std::optional<Rational> tail;
    if (f.tail_bound() || g.tail_bound()) {
        const Rational tf = f.tail_value();
        const Rational tg = g.tail_value();
        tail = tf * wiener_norm(g).upper + tg * wiener_norm(f).upper + tf * tg;
    }
    return TruncatedSeries::from_terms(f.dim(), cap, std::move(product), std::move(tail));
}

TruncatedSeries power(const TruncatedSeries& f, unsigned exponent) {
    TruncatedSeries result = TruncatedSeries::constant(f.dim(), f.cap(), ComplexRational(1));
    TruncatedSeries base = f;
    while (exponent > 0) {
        if (exponent & 1U) result = multiply(result, base);
        exponent >>= 1U;
        if (exponent > 0) base = multiply(base, base);
    }
    return result;
}

NormEnclosure wiener_norm(const TruncatedSeries& f) {
    NormEnclosure n;
    for (const auto& [m, c] : f.terms()) {
        if (c.is_real()) {
            Rational a = abs(c.re);
            n.lower += a;
            n.upper += a;
        } else {
            Rational a = abs(c.re);
            Rational b = abs(c.im);
            n.lower += std::max(a, b);
            n.upper += a + b;
            n.exact = false;
        }
    }
    if (!f.is_polynomial()) {
        n.upper += f.tail_value();
        n.exact = false;
    }
    return n;
}

Evaluation evaluate(const TruncatedSeries& f, std::span<const std::complex<double>> z) {
    if (z.size() != f.dim())
        throw DimensionMismatch("evaluate: point of length " + std::to_string(z.size()) +
                                " for a series of dimension " + std::to_string(f.dim()));
    std::vector<std::uint32_t> max_exp(f.dim(), 0);
    for (const auto& [m, c] : f.terms())
        for (std::size_t k = 0; k < f.dim(); ++k) max_exp[k] = std::max(max_exp[k], m.exps[k]);

    std::vector<std::vector<std::complex<double>>> powers(f.dim());
    for (std::size_t k = 0; k < f.dim(); ++k) {
        powers[k].resize(max_exp[k] + 1);
        powers[k][0] = 1.0;
        for (std::uint32_t e = 1; e <= max_exp[k]; ++e) powers[k][e] = powers[k][e - 1] * z[k];
    }

    std::complex<double> value = 0.0;
    double magnitude = 0.0;
    for (const auto& [m, c] : f.terms()) {
        std::complex<double> term = c.to_complex();
        for (std::size_t k = 0; k < f.dim(); ++k)
            if (m.exps[k] != 0) term *= powers[k][m.exps[k]];
        value += term;
        magnitude += std::abs(term);
    }

    // First-order rounding model: each term passes through at most 2(deg + 2)
    // complex operations before entering a sum of #terms values.
    constexpr double unit = std::numeric_limits<double>::epsilon() / 2;
    const double ops = 2.0 * (static_cast<double>(f.degree()) + 2.0) + static_cast<double>(f.terms().size());
    const double gamma = ops * unit / (1.0 - ops * unit);
    Evaluation out;
    out.value = value;
    out.error_bound = to_double(f.tail_value()) + 2.0 * gamma * magnitude;
    return out;
}

double sup_norm_lower(const TruncatedSeries& f, unsigned resolution) {
    if (resolution == 0) throw PreconditionError("sup_norm_lower: resolution must be at least 1");
    std::vector<std::complex<double>> roots(resolution);
    for (unsigned k = 0; k < resolution; ++k)
        roots[k] = std::polar(1.0, 2.0 * std::numbers::pi * k / resolution);

    std::vector<unsigned> index(f.dim(), 0);
    std::vector<std::complex<double>> point(f.dim(), roots[0]);
    double best = 0.0;
    while (true) {
        best = std::max(best, std::abs(evaluate(f, point).value));
        std::size_t k = 0;
        for (; k < f.dim(); ++k) {
            if (++index[k] < resolution) {
                point[k] = roots[index[k]];
                break;
            }
            index[k] = 0;
            point[k] = roots[0];
        }
        if (k == f.dim()) break;
    }
    return best;
}

TruncatedSeries dilate(const TruncatedSeries& f, const Rational& r) {
    if (sgn(r) < 0 || r > 1) throw PreconditionError("dilate: factor " + r.get_str() + " outside [0,1]");
    std::vector<Rational> rpow{Rational(1)};
    TermMap out;
    for (const auto& [m, c] : f.terms()) {
        auto deg = m.degree();
        while (rpow.size() <= deg) rpow.push_back(rpow.back() * r);
        out.emplace(m, c * rpow[deg]);
    }
    return TruncatedSeries::from_terms(f.dim(), f.cap(), std::move(out), f.tail_bound());
}

TruncatedSeries diagonal_D(const TruncatedSeries& f) {
    TermMap out;
    for (const auto& [m, c] : f.terms())
        accumulate(out, Monomial{static_cast<std::uint32_t>(m.degree())}, c);
    return TruncatedSeries::from_terms(1, f.cap(), std::move(out), f.tail_bound());
}

TruncatedSeries lift_U(const TruncatedSeries& g, std::size_t d) {
    if (g.dim() != 1) throw DimensionMismatch("lift_U expects a one-variable series");
    if (d == 0) throw PreconditionError("lift_U: target dimension must be positive");

    TermMap mean_terms;
    for (std::size_t k = 0; k < d; ++k)
        mean_terms.emplace(Monomial::unit(d, k), ComplexRational(ratio(1, d)));
    const auto mean = TruncatedSeries::from_terms(d, g.cap(), std::move(mean_terms));

    TruncatedSeries result(d, g.cap());
    TruncatedSeries mean_power = TruncatedSeries::constant(d, g.cap(), ComplexRational(1));
    std::uint32_t reached = 0;
    for (const auto& [m, c] : g.terms()) {
        while (reached < m.exps[0]) {
            mean_power = multiply(mean_power, mean);
            ++reached;
        }
        result = add(result, scale(mean_power, c));
    }
    return TruncatedSeries::from_terms(d, g.cap(), result.terms(), g.tail_bound());
}

} // namespace polysym
