#pragma once

// Expression syntax for series:
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' unary) | ('/' number))*
//   unary   := ('-' | '+') unary | power
//   power   := primary ('^' integer)?
//   primary := number | 'i' | variable | '(' expr ')'
//
// Numbers are integers or finite decimals, read exactly; "a/b" is division by a
// numeric literal. Variables are z1..zd (z, w when d <= 2) or e1..ed (alias s1..sd).
// Juxtaposition is not multiplication: "zw" and "2z" are errors.

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "polysym/elementary.hpp"
#include "polysym/series.hpp"

namespace polysym {

struct ExprAst {
    enum class Kind { number, imaginary_unit, variable, add, sub, mul, pow, neg, group };

    Kind kind = Kind::number;
    Rational number;       // number
    char basis = 'z';      // variable: 'z' or 'e'
    std::size_t index = 0; // variable, 0-based
    unsigned exponent = 0; // pow
    std::size_t position = 1;
    std::vector<ExprAst> children;
};

constexpr unsigned max_parse_exponent = 1000;

/// Syntax tree only; variable indices are checked against `dim`.
ExprAst parse_expression(std::string_view text, std::size_t dim);

using ParsedSeries = std::variant<TruncatedSeries, ElementarySeries>;

/// Expands the expression exactly. Expressions without variables come back as a
/// TruncatedSeries. Throws ParseError on syntax errors or a mix of z and e
/// variables, PreconditionError when the cap would truncate a term and
/// `allow_truncation` is false.
ParsedSeries parse(std::string_view text, std::size_t dim, unsigned cap, bool allow_truncation = false);

TruncatedSeries parse_series(std::string_view text, std::size_t dim, unsigned cap, bool allow_truncation = false);
ElementarySeries parse_elementary(std::string_view text, std::size_t dim, unsigned cap,
                                  bool allow_truncation = false);

/// Expression text accepted by parse(); the tail bound is not representable and is omitted.
std::string render(const TruncatedSeries& f);
std::string render(const ElementarySeries& g);

} // namespace polysym
