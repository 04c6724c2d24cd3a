#include "polysym/series_io.hpp"

#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <vector>

#include "polysym/errors.hpp"

namespace polysym {

namespace {

std::string header(char basis, std::size_t dim, unsigned cap) {
    return std::string("# ") + basis + " dim=" + std::to_string(dim) + " cap=" + std::to_string(cap) + "\n";
}

void write_exponents(std::ostringstream& out, const Monomial& m) {
    for (std::size_t k = 0; k < m.exps.size(); ++k) {
        if (k) out << ',';
        out << m.exps[k];
    }
}

template <typename Map>
void write_terms(std::ostringstream& out, const Map& terms) {
    for (const auto& [m, c] : terms) {
        write_exponents(out, m);
        out << '\t' << fraction_string(c.re) << '\t' << fraction_string(c.im) << '\n';
    }
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\r' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\r' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

std::vector<std::pair<std::size_t, std::string_view>> split(std::string_view s, char sep) {
    std::vector<std::pair<std::size_t, std::string_view>> parts;
    std::size_t start = 0;
    while (true) {
        auto pos = s.find(sep, start);
        parts.emplace_back(start, s.substr(start, pos == std::string_view::npos ? pos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

Rational rational_at(std::string_view field, std::size_t offset) {
    try {
        return parse_rational(trim(field));
    } catch (const ParseError& e) {
        throw ParseError("bad coefficient '" + std::string(field) + "'", offset + 1);
    }
}

std::uint32_t exponent_at(std::string_view field, std::size_t offset) {
    field = trim(field);
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size())
        throw ParseError("bad exponent '" + std::string(field) + "'", offset + 1);
    return value;
}

} // namespace

std::string to_text(const TruncatedSeries& f) {
    std::ostringstream out;
    out << header('z', f.dim(), f.cap());
    write_terms(out, f.terms());
    if (f.tail_bound()) out << "tail\t" << fraction_string(*f.tail_bound()) << '\n';
    return out.str();
}

std::string to_text(const ElementarySeries& g) {
    std::ostringstream out;
    out << header('e', g.dim(), g.cap());
    write_terms(out, g.terms());
    return out.str();
}

std::variant<TruncatedSeries, ElementarySeries> read_text(std::string_view text, std::optional<std::size_t> dim,
                                                          std::optional<unsigned> cap) {
    char basis = 'z';
    std::optional<std::size_t> header_dim;
    std::optional<unsigned> header_cap;
    std::optional<Rational> tail;
    std::vector<std::pair<Monomial, ComplexRational>> terms;

    for (auto [line_offset, raw] : split(text, '\n')) {
        auto line = trim(raw);
        if (line.empty()) continue;
        const std::size_t at = line_offset + static_cast<std::size_t>(line.data() - raw.data());
        if (line.front() == '#') {
            std::istringstream words{std::string(line.substr(1))};
            std::string word;
            while (words >> word) {
                if (word == "z" || word == "e") {
                    basis = word[0];
                } else if (word.rfind("dim=", 0) == 0) {
                    header_dim = exponent_at(std::string_view(word).substr(4), at);
                } else if (word.rfind("cap=", 0) == 0) {
                    header_cap = exponent_at(std::string_view(word).substr(4), at);
                }
            }
            continue;
        }
        auto fields = split(line, '\t');
        if (fields.size() == 2 && trim(fields[0].second) == "tail") {
            tail = rational_at(fields[1].second, at + fields[1].first);
            if (sgn(*tail) < 0) throw ParseError("negative tail bound", at + fields[1].first + 1);
            continue;
        }
        if (fields.size() != 3)
            throw ParseError("expected 'exponents<TAB>re<TAB>im', found " + std::to_string(fields.size()) + " fields",
                             at + 1);
        Monomial m;
        for (auto [off, e] : split(fields[0].second, ',')) m.exps.push_back(exponent_at(e, at + off));
        ComplexRational c(rational_at(fields[1].second, at + fields[1].first),
                          rational_at(fields[2].second, at + fields[2].first));
        if (!terms.empty() && terms.front().first.dim() != m.dim())
            throw ParseError("exponent vectors of different lengths", at + 1);
        terms.emplace_back(std::move(m), std::move(c));
    }

    if (header_dim && dim && *header_dim != *dim)
        throw DimensionMismatch("series declares dim=" + std::to_string(*header_dim) + ", expected " +
                                std::to_string(*dim));
    std::size_t d = header_dim ? *header_dim : dim ? *dim : terms.empty() ? 0 : terms.front().first.dim();
    if (d == 0) throw ParseError("cannot infer the dimension of an empty series", 1);
    if (!terms.empty() && terms.front().first.dim() != d)
        throw DimensionMismatch("exponent vectors of length " + std::to_string(terms.front().first.dim()) +
                                " in a series of dimension " + std::to_string(d));

    unsigned c = 0;
    if (cap) {
        c = *cap;
    } else if (header_cap) {
        c = *header_cap;
    } else {
        for (const auto& [m, v] : terms)
            c = std::max<unsigned>(c, static_cast<unsigned>(basis == 'e' ? weighted_degree(m) : m.degree()));
    }

    if (basis == 'e') {
        if (tail) throw ParseError("elementary series carry no tail line", 1);
        ElementaryTermMap map;
        for (auto& [m, v] : terms) {
            auto [it, inserted] = map.try_emplace(m, v);
            if (!inserted) it->second += v;
        }
        return ElementarySeries::from_terms(d, c, std::move(map));
    }
    TermMap map;
    for (auto& [m, v] : terms) {
        auto [it, inserted] = map.try_emplace(m, v);
        if (!inserted) it->second += v;
    }
    return TruncatedSeries::from_terms(d, c, std::move(map), std::move(tail));
}

TruncatedSeries series_from_text(std::string_view text, std::optional<std::size_t> dim,
                                 std::optional<unsigned> cap) {
    auto any = read_text(text, dim, cap);
    if (auto* f = std::get_if<TruncatedSeries>(&any)) return std::move(*f);
    throw PreconditionError("expected a series in z-variables, found an elementary series");
}

ElementarySeries elementary_from_text(std::string_view text, std::optional<std::size_t> dim,
                                      std::optional<unsigned> cap) {
    auto any = read_text(text, dim, cap);
    if (auto* g = std::get_if<ElementarySeries>(&any)) return std::move(*g);
    throw PreconditionError("expected an elementary series (header '# e ...')");
}

std::string format_complex(std::complex<double> z) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
    return buf;
}

namespace {

double parse_double(std::string_view s, std::string_view whole) {
    std::string owned(s);
    if (owned.empty() || owned == "+") return 1.0;
    if (owned == "-") return -1.0;
    char* end = nullptr;
    errno = 0;
    double v = std::strtod(owned.c_str(), &end);
    if (end != owned.c_str() + owned.size() || errno == ERANGE)
        throw ParseError("malformed complex number '" + std::string(whole) + "'", 1);
    return v;
}

} // namespace

std::complex<double> parse_complex(std::string_view text) {
    auto s = trim(text);
    if (s.empty()) throw ParseError("empty complex number", 1);
    if (s.back() != 'i') {
        if (s == "+" || s == "-") throw ParseError("malformed complex number '" + std::string(s) + "'", 1);
        return {parse_double(s, s), 0.0};
    }
    auto body = s.substr(0, s.size() - 1);
    std::size_t split_at = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split_at = k;
            break;
        }
    }
    if (split_at == std::string_view::npos) return {0.0, parse_double(body, s)};
    auto re = body.substr(0, split_at);
    if (re.empty()) throw ParseError("malformed complex number '" + std::string(s) + "'", 1);
    return {parse_double(re, s), parse_double(body.substr(split_at), s)};
}

std::string format_point(std::span<const std::complex<double>> z) {
    std::string out;
    for (std::size_t k = 0; k < z.size(); ++k) {
        if (k) out += ',';
        out += format_complex(z[k]);
    }
    return out;
}

Point parse_point(std::string_view text) {
    auto s = trim(text);
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
    Point out;
    for (auto [off, part] : split(s, ',')) {
        try {
            out.push_back(parse_complex(part));
        } catch (const ParseError&) {
            throw ParseError("malformed coordinate '" + std::string(trim(part)) + "'", off + 1);
        }
    }
    return out;
}

} // namespace polysym
