#pragma once

// Elementary symmetric polynomials and the rewrite between the monomial basis
// and the basis of products e_1^{m_1} ... e_d^{m_d}.

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "polysym/series.hpp"
#include "polysym/symmetry.hpp"

namespace polysym {

/// sum_j j * m_j for an exponent vector over (e_1, ..., e_d).
std::uint64_t weighted_degree(const Monomial& m);

/// Weighted degree ascending, then exponent vectors descending (e_1^2 before e_2).
struct WeightedOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

using ElementaryTermMap = std::map<Monomial, ComplexRational, WeightedOrder>;

/// Polynomial (or truncated formal series) in e_1, ..., e_d with a cap on the weighted degree.
class ElementarySeries {
public:
    ElementarySeries(std::size_t dim, unsigned cap);

    /// Drops zero coefficients and every term of weighted degree above `cap`.
    /// `truncated` carries the flag forward from the operands.
    static ElementarySeries from_terms(std::size_t dim, unsigned cap, ElementaryTermMap terms,
                                       bool truncated = false);
    static ElementarySeries constant(std::size_t dim, unsigned cap, const ComplexRational& c);
    /// e_{k+1} (0-based k).
    static ElementarySeries variable(std::size_t dim, unsigned cap, std::size_t k);

    std::size_t dim() const { return dim_; }
    unsigned cap() const { return cap_; }
    const ElementaryTermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// True once any operation has discarded a term above the cap.
    bool truncated() const { return truncated_; }
    ComplexRational coefficient(const Monomial& m) const;

    friend bool operator==(const ElementarySeries& a, const ElementarySeries& b) {
        return a.dim_ == b.dim_ && a.terms_ == b.terms_;
    }

private:
    std::size_t dim_;
    unsigned cap_;
    ElementaryTermMap terms_;
    bool truncated_ = false;
};

ElementarySeries add(const ElementarySeries& f, const ElementarySeries& g);
ElementarySeries subtract(const ElementarySeries& f, const ElementarySeries& g);
ElementarySeries negate(const ElementarySeries& f);
ElementarySeries scale(const ElementarySeries& f, const ComplexRational& c);
ElementarySeries multiply(const ElementarySeries& f, const ElementarySeries& g);
ElementarySeries power(const ElementarySeries& f, unsigned exponent);

/// g(s_1, ..., s_d) in floating point.
std::complex<double> evaluate_elementary(const ElementarySeries& g, std::span<const std::complex<double>> s);

/// e_k in d variables: sum over k-subsets of the product of their variables.
/// `cap` defaults to k.
TruncatedSeries elementary_poly(std::size_t k, std::size_t d, std::optional<unsigned> cap = std::nullopt);

/// p_0, ..., p_cap where p_k collects the terms of total degree k. The tail bound
/// of f is not distributed over the parts.
std::vector<TruncatedSeries> homogeneous_parts(const TruncatedSeries& f);

/// Unique q with from_elementary(q) == p, by leading-term subtraction.
/// Throws PreconditionError if p is not symmetric, or (with require_exact) not a
/// polynomial; without require_exact the tail bound of p is ignored.
ElementarySeries to_elementary(const TruncatedSeries& p, bool require_exact = true);

/// Substitutes e_j(z) into q and expands, truncating at `cap`.
TruncatedSeries from_elementary(const ElementarySeries& q, unsigned cap);

/// Degree-by-degree rewrite of a symmetric series; weighted cap equals `cap`.
ElementarySeries series_to_elementary(const TruncatedSeries& f, unsigned cap);

/// max over points of |f(z) - g(e_1(z), ..., e_d(z))|. 0 for an empty list.
double compare_composition(const TruncatedSeries& f, const ElementarySeries& g, std::span<const Point> points);

} // namespace polysym
