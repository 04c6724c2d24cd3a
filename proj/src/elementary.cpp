#include "polysym/elementary.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "polysym/errors.hpp"

namespace polysym {

std::uint64_t weighted_degree(const Monomial& m) {
    std::uint64_t total = 0;
    for (std::size_t j = 0; j < m.exps.size(); ++j) total += (j + 1) * static_cast<std::uint64_t>(m.exps[j]);
    return total;
}

bool WeightedOrder::operator()(const Monomial& a, const Monomial& b) const {
    auto wa = weighted_degree(a);
    auto wb = weighted_degree(b);
    if (wa != wb) return wa < wb;
    return b.exps < a.exps;
}

ElementarySeries::ElementarySeries(std::size_t dim, unsigned cap) : dim_(dim), cap_(cap) {
    if (dim == 0) throw PreconditionError("series dimension must be positive");
}

ElementarySeries ElementarySeries::from_terms(std::size_t dim, unsigned cap, ElementaryTermMap terms,
                                              bool truncated) {
    ElementarySeries out(dim, cap);
    out.truncated_ = truncated;
    for (auto it = terms.begin(); it != terms.end();) {
        if (it->first.dim() != dim)
            throw DimensionMismatch("exponent vector of length " + std::to_string(it->first.dim()) +
                                    " in an elementary series of dimension " + std::to_string(dim));
        if (it->second.is_zero()) {
            it = terms.erase(it);
        } else if (weighted_degree(it->first) > cap) {
            out.truncated_ = true;
            it = terms.erase(it);
        } else {
            ++it;
        }
    }
    out.terms_ = std::move(terms);
    return out;
}

ElementarySeries ElementarySeries::constant(std::size_t dim, unsigned cap, const ComplexRational& c) {
    ElementaryTermMap t;
    t.emplace(Monomial(dim), c);
    return from_terms(dim, cap, std::move(t));
}

ElementarySeries ElementarySeries::variable(std::size_t dim, unsigned cap, std::size_t k) {
    if (k >= dim) throw DimensionMismatch("elementary index " + std::to_string(k + 1) + " exceeds dimension");
    ElementaryTermMap t;
    t.emplace(Monomial::unit(dim, k), ComplexRational(1));
    return from_terms(dim, cap, std::move(t));
}

ComplexRational ElementarySeries::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? ComplexRational() : it->second;
}

namespace {

void require_same_dim(const ElementarySeries& f, const ElementarySeries& g) {
    if (f.dim() != g.dim()) throw DimensionMismatch("elementary series dimensions differ");
}

template <typename Map>
void accumulate(Map& into, const Monomial& m, const ComplexRational& c) {
    auto [it, inserted] = into.try_emplace(m, c);
    if (!inserted) it->second += c;
}

} // namespace

ElementarySeries add(const ElementarySeries& f, const ElementarySeries& g) {
    require_same_dim(f, g);
    ElementaryTermMap sum = f.terms();
    for (const auto& [m, c] : g.terms()) accumulate(sum, m, c);
    return ElementarySeries::from_terms(f.dim(), std::min(f.cap(), g.cap()), std::move(sum),
                                        f.truncated() || g.truncated());
}

ElementarySeries negate(const ElementarySeries& f) { return scale(f, ComplexRational(-1)); }

ElementarySeries subtract(const ElementarySeries& f, const ElementarySeries& g) { return add(f, negate(g)); }

ElementarySeries scale(const ElementarySeries& f, const ComplexRational& c) {
    ElementaryTermMap out;
    for (const auto& [m, v] : f.terms()) out.emplace(m, v * c);
    return ElementarySeries::from_terms(f.dim(), f.cap(), std::move(out), f.truncated());
}

ElementarySeries multiply(const ElementarySeries& f, const ElementarySeries& g) {
    require_same_dim(f, g);
    const unsigned cap = std::min(f.cap(), g.cap());
    ElementaryTermMap product;
    bool truncated = f.truncated() || g.truncated();
    for (const auto& [mf, cf] : f.terms())
        for (const auto& [mg, cg] : g.terms()) {
            Monomial m = mf * mg;
            if (weighted_degree(m) > cap) {
                truncated = true;
                continue;
            }
            accumulate(product, m, cf * cg);
        }
    return ElementarySeries::from_terms(f.dim(), cap, std::move(product), truncated);
}

ElementarySeries power(const ElementarySeries& f, unsigned exponent) {
    ElementarySeries result = ElementarySeries::constant(f.dim(), f.cap(), ComplexRational(1));
    ElementarySeries base = f;
    while (exponent > 0) {
        if (exponent & 1U) result = multiply(result, base);
        exponent >>= 1U;
        if (exponent > 0) base = multiply(base, base);
    }
    return result;
}

std::complex<double> evaluate_elementary(const ElementarySeries& g, std::span<const std::complex<double>> s) {
    if (s.size() != g.dim()) throw DimensionMismatch("evaluate_elementary: wrong number of arguments");
    std::complex<double> value = 0.0;
    for (const auto& [m, c] : g.terms()) {
        std::complex<double> term = c.to_complex();
        for (std::size_t j = 0; j < s.size(); ++j)
            for (std::uint32_t e = 0; e < m.exps[j]; ++e) term *= s[j];
        value += term;
    }
    return value;
}

TruncatedSeries elementary_poly(std::size_t k, std::size_t d, std::optional<unsigned> cap) {
    if (d == 0 || k < 1 || k > d)
        throw PreconditionError("elementary_poly: k=" + std::to_string(k) + " outside 1.." + std::to_string(d));
    // Selection mask with k leading ones, walked through all C(d, k) arrangements.
    std::vector<std::uint32_t> mask(d, 0);
    std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(k), 1U);
    TermMap terms;
    do {
        terms.emplace(Monomial(mask), ComplexRational(1));
    } while (std::prev_permutation(mask.begin(), mask.end()));
    return TruncatedSeries::from_terms(d, cap.value_or(static_cast<unsigned>(k)), std::move(terms));
}

std::vector<TruncatedSeries> homogeneous_parts(const TruncatedSeries& f) {
    std::vector<TermMap> buckets(static_cast<std::size_t>(f.cap()) + 1);
    for (const auto& [m, c] : f.terms()) buckets[m.degree()].emplace(m, c);
    std::vector<TruncatedSeries> parts;
    parts.reserve(buckets.size());
    for (auto& b : buckets) parts.push_back(TruncatedSeries::from_terms(f.dim(), f.cap(), std::move(b)));
    return parts;
}

namespace {

/// Memoized e_j^m products in the monomial basis.
class ElementaryProducts {
public:
    ElementaryProducts(std::size_t d, unsigned cap) : d_(d), cap_(cap) {}

    TruncatedSeries product(const Monomial& m) {
        TruncatedSeries out = TruncatedSeries::constant(d_, cap_, ComplexRational(1));
        for (std::size_t j = 0; j < d_; ++j)
            if (m.exps[j] != 0) out = multiply(out, power_of(j, m.exps[j]));
        return out;
    }

private:
    const TruncatedSeries& power_of(std::size_t j, std::uint32_t e) {
        auto key = std::make_pair(j, e);
        auto it = cache_.find(key);
        if (it == cache_.end())
            it = cache_.emplace(key, power(elementary_poly(j + 1, d_, cap_), e)).first;
        return it->second;
    }

    std::size_t d_;
    unsigned cap_;
    std::map<std::pair<std::size_t, std::uint32_t>, TruncatedSeries> cache_;
};

} // namespace

ElementarySeries to_elementary(const TruncatedSeries& p, bool require_exact) {
    if (require_exact && !p.is_polynomial())
        throw PreconditionError("to_elementary: input carries a nonzero tail bound, not a polynomial");
    if (!is_symmetric(p)) throw PreconditionError("to_elementary: input is not symmetric");

    const std::size_t d = p.dim();
    const unsigned cap = std::max<unsigned>(p.cap(), static_cast<unsigned>(p.degree()));
    ElementaryProducts products(d, cap);
    TruncatedSeries remaining = TruncatedSeries::from_terms(d, cap, p.terms());
    ElementaryTermMap result;
    std::optional<Monomial> previous;

    while (!remaining.terms().empty()) {
        // In GradedOrder the lex-largest monomial of the top degree opens its degree block.
        const auto top = static_cast<std::uint32_t>(remaining.degree());
        Monomial probe(d);
        probe.exps[0] = top;
        const auto lead_it = remaining.terms().lower_bound(probe);
        const Monomial lead = lead_it->first;
        const ComplexRational c = lead_it->second;

        if (previous && !graded_lex_less(lead, *previous))
            throw std::logic_error("to_elementary: leading monomial failed to decrease");

        Monomial e_exps(d);
        for (std::size_t j = 0; j < d; ++j) {
            const std::uint32_t next = j + 1 < d ? lead.exps[j + 1] : 0;
            if (lead.exps[j] < next) throw std::logic_error("to_elementary: leading exponents not non-increasing");
            e_exps.exps[j] = lead.exps[j] - next;
        }

        remaining = subtract(remaining, scale(products.product(e_exps), c));
        result.emplace(std::move(e_exps), c);
        previous = lead;
    }
    return ElementarySeries::from_terms(d, cap, std::move(result));
}

TruncatedSeries from_elementary(const ElementarySeries& q, unsigned cap) {
    ElementaryProducts products(q.dim(), cap);
    TruncatedSeries out(q.dim(), cap);
    for (const auto& [m, c] : q.terms()) out = add(out, scale(products.product(m), c));
    return out;
}

ElementarySeries series_to_elementary(const TruncatedSeries& f, unsigned cap) {
    if (!is_symmetric(f)) throw PreconditionError("series_to_elementary: input is not symmetric");
    ElementaryTermMap total;
    const auto parts = homogeneous_parts(f);
    for (std::size_t k = 0; k < parts.size() && k <= cap; ++k) {
        if (parts[k].terms().empty()) continue;
        const auto rewritten = to_elementary(parts[k], false);
        for (const auto& [m, c] : rewritten.terms()) accumulate(total, m, c);
    }
    return ElementarySeries::from_terms(f.dim(), cap, std::move(total));
}

double compare_composition(const TruncatedSeries& f, const ElementarySeries& g, std::span<const Point> points) {
    if (f.dim() != g.dim()) throw DimensionMismatch("compare_composition: dimensions differ");
    double worst = 0.0;
    for (const auto& z : points) {
        const auto s = elementary_values(z);
        worst = std::max(worst, std::abs(evaluate(f, z).value - evaluate_elementary(g, s)));
    }
    return worst;
}

} // namespace polysym
