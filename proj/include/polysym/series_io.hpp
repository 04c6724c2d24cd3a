#pragma once

// Canonical text interchange format.
//
//   # z dim=2 cap=4          optional header; "e" instead of "z" for elementary series
//   2,0<TAB>1/1<TAB>0/1      one line per term: exponents, real part, imaginary part
//   1,1<TAB>-3/2<TAB>1/4
//   tail<TAB>1/8             optional certified l1 mass of discarded terms
//
// Terms are written in graded order and coefficients always as p/q.

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "polysym/elementary.hpp"
#include "polysym/series.hpp"
#include "polysym/symmetry.hpp"

namespace polysym {

std::string to_text(const TruncatedSeries& f);
std::string to_text(const ElementarySeries& g);

/// Reads either basis. Dimension comes from the header, then `dim`, then the first
/// term; cap from `cap`, then the header, then the highest degree present.
/// Throws ParseError (1-based character offsets) on malformed input.
std::variant<TruncatedSeries, ElementarySeries> read_text(std::string_view text,
                                                          std::optional<std::size_t> dim = std::nullopt,
                                                          std::optional<unsigned> cap = std::nullopt);

TruncatedSeries series_from_text(std::string_view text, std::optional<std::size_t> dim = std::nullopt,
                                 std::optional<unsigned> cap = std::nullopt);
ElementarySeries elementary_from_text(std::string_view text, std::optional<std::size_t> dim = std::nullopt,
                                      std::optional<unsigned> cap = std::nullopt);

/// "re+imi", e.g. "0.5-0.25i". Round-trips doubles exactly.
std::string format_complex(std::complex<double> z);
std::complex<double> parse_complex(std::string_view text);

/// Comma-separated "re+imi" coordinates.
std::string format_point(std::span<const std::complex<double>> z);
Point parse_point(std::string_view text);

} // namespace polysym
