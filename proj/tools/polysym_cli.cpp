// polysym: command-line front end for the series, symmetry, elementary-basis,
// corona and matrix modules.
//
// Exit codes: 0 success, 1 usage or parse error, 2 precondition violation,
// 3 numerical breakdown.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "polysym/corona.hpp"
#include "polysym/elementary.hpp"
#include "polysym/errors.hpp"
#include "polysym/matrix.hpp"
#include "polysym/parser.hpp"
#include "polysym/series.hpp"
#include "polysym/series_io.hpp"
#include "polysym/symmetry.hpp"
#include "polysym/witnesses.hpp"

using namespace polysym;
using nlohmann::json;

namespace {

struct Globals {
    std::size_t dim = 2;
    unsigned cap = 8;
    bool cap_given = false;
    std::uint64_t seed = 0;
    std::string format = "text";

    bool json() const { return format == "json"; }
};

class UsageError : public Error {
public:
    using Error::Error;
};

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    if (!in) throw UsageError("cannot read " + p.string());
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

bool looks_like_series_text(const std::string& s) { return s.find('\t') != std::string::npos || s.rfind("#", 0) == 0; }

/// A series argument is a file in the text format, a file holding an expression,
/// or an inline expression.
ParsedSeries load_any(const std::string& arg, const Globals& g) {
    std::string text = arg;
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) text = slurp(arg);
    const std::optional<unsigned> cap = g.cap_given ? std::optional<unsigned>(g.cap) : std::nullopt;
    if (looks_like_series_text(text)) return read_text(text, std::nullopt, cap);
    return parse(text, g.dim, g.cap);
}

TruncatedSeries load_series(const std::string& arg, const Globals& g) {
    auto any = load_any(arg, g);
    if (auto* f = std::get_if<TruncatedSeries>(&any)) return std::move(*f);
    throw PreconditionError("'" + arg + "' is an elementary series; a z-series is required here");
}

ElementarySeries load_elementary(const std::string& arg, const Globals& g) {
    auto any = load_any(arg, g);
    if (auto* e = std::get_if<ElementarySeries>(&any)) return std::move(*e);
    const auto& f = std::get<TruncatedSeries>(any);
    if (f.degree() == 0 && f.is_polynomial())
        return ElementarySeries::constant(f.dim(), f.cap(), f.coefficient(Monomial(f.dim())));
    throw PreconditionError("'" + arg + "' is a z-series; an elementary series is required here");
}

json coefficient_json(const ComplexRational& c) { return {{"re", fraction_string(c.re)}, {"im", fraction_string(c.im)}}; }

template <typename Map>
json terms_json(const Map& terms) {
    json out = json::array();
    for (const auto& [m, c] : terms) {
        json t = coefficient_json(c);
        t["exponents"] = m.exps;
        out.push_back(std::move(t));
    }
    return out;
}

json series_json(const TruncatedSeries& f) {
    return {{"basis", "z"},
            {"dim", f.dim()},
            {"cap", f.cap()},
            {"terms", terms_json(f.terms())},
            {"tail", f.tail_bound() ? json(fraction_string(*f.tail_bound())) : json(nullptr)},
            {"expression", render(f)}};
}

json series_json(const ElementarySeries& g) {
    return {{"basis", "e"}, {"dim", g.dim()}, {"cap", g.cap()}, {"terms", terms_json(g.terms())},
            {"expression", render(g)}};
}

json enclosure_json(const NormEnclosure& n) {
    return {{"lower", fraction_string(n.lower)}, {"upper", fraction_string(n.upper)}, {"exact", n.exact},
            {"lower_float", to_double(n.lower)}, {"upper_float", to_double(n.upper)}};
}

std::string enclosure_text(const NormEnclosure& n) {
    if (n.exact) return fraction_string(n.lower) + " (exact)";
    return "[" + fraction_string(n.lower) + ", " + fraction_string(n.upper) + "]";
}

template <typename S>
void emit_series(const S& s, const Globals& g) {
    if (g.json())
        std::cout << series_json(s).dump(2) << '\n';
    else
        std::cout << to_text(s);
}

void emit(const json& j, const std::string& text, const Globals& g) {
    if (g.json())
        std::cout << j.dump(2) << '\n';
    else
        std::cout << text;
}

std::vector<Point> random_points(std::size_t count, std::size_t dim, double radius, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Point> out;
    for (std::size_t p = 0; p < count; ++p) {
        Point z(dim);
        for (auto& c : z) c = std::polar(radius * std::sqrt(unit(rng)), 2.0 * std::numbers::pi * unit(rng));
        out.push_back(std::move(z));
    }
    return out;
}

SeriesMatrix load_matrix(const std::string& path, const Globals& g) {
    const json doc = json::parse(slurp(path));
    const json& rows = doc.is_object() ? doc.at("matrix") : doc;
    Globals local = g;
    if (doc.is_object()) {
        if (doc.contains("dim")) local.dim = doc["dim"].get<std::size_t>();
        if (doc.contains("cap")) {
            local.cap = doc["cap"].get<unsigned>();
            local.cap_given = true;
        }
    }
    if (!rows.is_array() || rows.empty()) throw UsageError("matrix file must hold a non-empty array of rows");
    const std::size_t n = rows.size();
    std::vector<TruncatedSeries> entries;
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != n) throw DimensionMismatch("matrix file rows must form a square");
        for (const auto& cell : row) {
            const auto text = cell.get<std::string>();
            const std::optional<unsigned> cap = local.cap_given ? std::optional<unsigned>(local.cap) : std::nullopt;
            entries.push_back(looks_like_series_text(text) ? series_from_text(text, local.dim, cap)
                                                           : parse_series(text, local.dim, local.cap));
        }
    }
    return SeriesMatrix(n, std::move(entries));
}

std::string point_text(const Point& p) { return format_point(p); }

json point_json(const Point& p) {
    json out = json::array();
    for (auto c : p) out.push_back({c.real(), c.imag()});
    return out;
}

AlphaRule parse_rule(const std::string& s) {
    if (s == "varying") return AlphaRule::varying_alpha_k;
    if (s == "fixed") return AlphaRule::fixed_alpha_n;
    throw UsageError("--rule must be 'varying' or 'fixed'");
}

std::string rule_name(AlphaRule r) { return r == AlphaRule::fixed_alpha_n ? "fixed" : "varying"; }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact truncated power series, symmetrization and elementary-basis tools"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--dim", g.dim, "Number of variables d")->check(CLI::PositiveNumber);
    auto* cap_opt = app.add_option("--cap", g.cap, "Total-degree truncation cap");
    app.add_option("--seed", g.seed, "Seed for randomized checks");
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));

    std::string series_arg, second_arg;
    unsigned resolution = 16, layers = 4, points = 100, steps = 16, n_blaschke = 1, N = 3;
    double radius = 0.7, t = 0.0;
    std::vector<std::string> data, solution;
    std::string write_prefix, matrix_path, rule = "varying", blaschke_point;
    bool witness = false;

    auto* parse_cmd = app.add_subcommand("parse", "Expand an expression to canonical series text");
    parse_cmd->add_option("expression", series_arg)->required();

    auto* sym_cmd = app.add_subcommand("symmetrize", "Average a series over all coordinate permutations");
    sym_cmd->add_option("series", series_arg)->required();

    auto* symcheck_cmd = app.add_subcommand("sym-check", "Report whether a series is symmetric");
    symcheck_cmd->add_option("series", series_arg)->required();

    auto* norm_cmd = app.add_subcommand("wiener-norm", "Enclose the l1 coefficient norm");
    norm_cmd->add_option("series", series_arg)->required();

    auto* sup_cmd = app.add_subcommand("sup-norm", "Grid lower bound for the sup norm on the torus");
    sup_cmd->add_option("series", series_arg)->required();
    sup_cmd->add_option("--resolution", resolution)->check(CLI::PositiveNumber);

    auto* toe_cmd = app.add_subcommand("to-elementary", "Rewrite a symmetric polynomial in e_1..e_d");
    toe_cmd->add_option("series", series_arg)->required();

    auto* frome_cmd = app.add_subcommand("from-elementary", "Expand an e-polynomial in the z-variables");
    frome_cmd->add_option("series", series_arg)->required();

    auto* ste_cmd = app.add_subcommand("series-to-elementary", "Degree-by-degree rewrite of a symmetric series");
    ste_cmd->add_option("series", series_arg)->required();

    auto* cmp_cmd = app.add_subcommand("compare-composition", "max |f(z) - g(e(z))| over random points");
    cmp_cmd->add_option("f", series_arg)->required();
    cmp_cmd->add_option("g", second_arg)->required();
    cmp_cmd->add_option("--points", points);
    cmp_cmd->add_option("--radius", radius)->check(CLI::Range(0.0, 1.0));

    auto* corona_cmd = app.add_subcommand("corona-check", "Corona estimate and Bezout verification");
    corona_cmd->add_option("--data", data)->required()->expected(1, -1);
    corona_cmd->add_option("--solution", solution)->expected(1, -1);
    corona_cmd->add_option("--resolution", resolution)->check(CLI::PositiveNumber);
    corona_cmd->add_option("--layers", layers)->check(CLI::PositiveNumber);
    corona_cmd->add_option("--write-symmetrized", write_prefix, "Write PREFIX1.series, ... for the symmetrized solution");

    auto* qd_cmd = app.add_subcommand("quotient-dist", "Distance between two permutation orbits");
    qd_cmd->add_option("z", series_arg)->required();
    qd_cmd->add_option("w", second_arg)->required();

    auto* canon_cmd = app.add_subcommand("canonical", "Canonical orbit representative of a point");
    canon_cmd->add_option("z", series_arg)->required();

    auto* hom_cmd = app.add_subcommand("homotopy", "Contraction H(t,[z]) = [(1-t)z]");
    hom_cmd->add_option("z", series_arg)->required();
    hom_cmd->add_option("--t", t)->required();

    auto* sl_cmd = app.add_subcommand("sl-homotopy", "Sample the null-homotopy of an SL_n matrix");
    sl_cmd->add_option("--matrix", matrix_path)->required()->check(CLI::ExistingFile);
    sl_cmd->add_option("--steps", steps)->check(CLI::Range(2U, 100000U));

    auto* bl_cmd = app.add_subcommand("blaschke", "Evaluate B_n or report the ideal-chain witness");
    bl_cmd->add_option("--n", n_blaschke)->check(CLI::PositiveNumber);
    bl_cmd->add_option("--z", blaschke_point, "Point to evaluate B_n at");
    bl_cmd->add_option("--rule", rule)->check(CLI::IsMember({"varying", "fixed"}));
    bl_cmd->add_option("--resolution", resolution)->check(CLI::PositiveNumber);
    bl_cmd->add_flag("--witness", witness, "Report the chain witness for F_n = B_n(z_1)...B_n(z_d)");

    auto* ex_cmd = app.add_subcommand("paper-example", "The worked example sum (z^2+w^2)^n/(n^2 2^n)");
    ex_cmd->add_option("--N", N)->check(CLI::PositiveNumber);
    ex_cmd->add_option("--points", points);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }
    g.cap_given = cap_opt->count() > 0;

    try {
        if (*parse_cmd) {
            const auto parsed = parse(series_arg, g.dim, g.cap);
            std::visit([&](const auto& s) { emit_series(s, g); }, parsed);
        } else if (*sym_cmd) {
            emit_series(symmetrize(load_series(series_arg, g)), g);
        } else if (*symcheck_cmd) {
            const bool sym = is_symmetric(load_series(series_arg, g));
            emit(json{{"symmetric", sym}}, sym ? "symmetric\n" : "not symmetric\n", g);
        } else if (*norm_cmd) {
            const auto n = wiener_norm(load_series(series_arg, g));
            emit(enclosure_json(n), "wiener_norm: " + enclosure_text(n) + "\n", g);
        } else if (*sup_cmd) {
            const double v = sup_norm_lower(load_series(series_arg, g), resolution);
            std::ostringstream s;
            s.precision(17);
            s << "sup_norm_lower: " << v << "\n";
            emit(json{{"sup_norm_lower", v}, {"resolution", resolution}}, s.str(), g);
        } else if (*toe_cmd) {
            emit_series(to_elementary(load_series(series_arg, g)), g);
        } else if (*frome_cmd) {
            const auto q = load_elementary(series_arg, g);
            emit_series(from_elementary(q, g.cap_given ? g.cap : q.cap()), g);
        } else if (*ste_cmd) {
            const auto f = load_series(series_arg, g);
            emit_series(series_to_elementary(f, g.cap_given ? g.cap : f.cap()), g);
        } else if (*cmp_cmd) {
            const auto f = load_series(series_arg, g);
            const auto e = load_elementary(second_arg, g);
            const auto pts = random_points(points, f.dim(), radius, g.seed);
            const double dev = compare_composition(f, e, pts);
            std::ostringstream s;
            s.precision(17);
            s << "max_deviation: " << dev << "\npoints: " << points << "\nradius: " << radius << "\n";
            emit(json{{"max_deviation", dev}, {"points", points}, {"radius", radius}}, s.str(), g);
        } else if (*corona_cmd) {
            std::vector<TruncatedSeries> fs, gs;
            for (const auto& a : data) fs.push_back(load_series(a, g));
            for (const auto& a : solution) gs.push_back(load_series(a, g));
            CoronaData cd{fs, gs.empty() ? std::nullopt : std::optional(gs)};
            cd.validate();
            json j;
            std::ostringstream s;
            s.precision(17);
            const double delta = corona_delta(fs, resolution, layers);
            j["delta_estimate"] = delta;
            j["resolution"] = resolution;
            j["layers"] = layers;
            s << "delta_estimate: " << delta << "  (grid " << resolution << "^d x " << layers
              << " layers; sampling, not a certified lower bound)\n";
            if (!gs.empty()) {
                const auto res = verify_bezout(fs, gs);
                j["residual"] = enclosure_json(res);
                s << "bezout_residual: " << enclosure_text(res) << "\n";
                const auto delta_sol = delta_from_solution(gs);
                j["delta_from_solution"] = fraction_string(delta_sol);
                s << "delta_from_solution: " << fraction_string(delta_sol) << "\n";
                bool all_sym = true;
                for (const auto& f : fs) all_sym = all_sym && is_symmetric(f);
                if (all_sym && sgn(res.upper) == 0) {
                    const auto sym = symmetrize_solution(fs, gs);
                    j["symmetrized_solution"] = json::array();
                    for (std::size_t i = 0; i < sym.size(); ++i) {
                        j["symmetrized_solution"].push_back(series_json(sym[i]));
                        s << "symmetrized g" << i + 1 << ": " << render(sym[i]) << "\n";
                        if (!write_prefix.empty()) {
                            std::ofstream out(write_prefix + std::to_string(i + 1) + ".series");
                            if (!out) throw UsageError("cannot write " + write_prefix + std::to_string(i + 1) + ".series");
                            out << to_text(sym[i]);
                        }
                    }
                } else if (!write_prefix.empty()) {
                    throw PreconditionError("symmetrization needs symmetric data and an exact Bezout solution");
                }
            }
            emit(j, s.str(), g);
        } else if (*qd_cmd) {
            const double d = quotient_dist(parse_point(series_arg), parse_point(second_arg));
            std::ostringstream s;
            s.precision(17);
            s << "quotient_dist: " << d << "\n";
            emit(json{{"quotient_dist", d}}, s.str(), g);
        } else if (*canon_cmd) {
            const auto p = OrbitPoint::from(parse_point(series_arg));
            emit(json{{"canonical", point_json(p.canonical)}}, point_text(p.canonical) + "\n", g);
        } else if (*hom_cmd) {
            const auto p = contraction_homotopy(t, parse_point(series_arg));
            emit(json{{"t", t}, {"canonical", point_json(p.canonical)}}, point_text(p.canonical) + "\n", g);
        } else if (*sl_cmd) {
            const auto m = load_matrix(matrix_path, g);
            const auto samples = full_homotopy_sample(m, steps);
            json j = json::array();
            std::ostringstream s;
            s.precision(6);
            s << "t\tdet_residual\top_norm_bound\n";
            for (const auto& smp : samples) {
                j.push_back({{"t", smp.t}, {"det_residual", smp.det_residual}, {"op_norm_bound", smp.op_norm_bound}});
                s << smp.t << '\t' << smp.det_residual << '\t' << smp.op_norm_bound << '\n';
            }
            emit(json{{"samples", j}}, s.str(), g);
        } else if (*bl_cmd) {
            const auto r = parse_rule(rule);
            json j{{"n", n_blaschke}, {"rule", rule_name(r)}};
            std::ostringstream s;
            s.precision(17);
            if (!blaschke_point.empty()) {
                const auto v = blaschke_eval({n_blaschke, r}, parse_complex(blaschke_point));
                j["value"] = {v.real(), v.imag()};
                s << "B_" << n_blaschke << "(" << blaschke_point << ") = " << format_complex(v) << "\n";
            }
            if (witness || blaschke_point.empty()) {
                const auto w = blaschke_chain_witness(n_blaschke, static_cast<unsigned>(g.dim), resolution, r);
                j["witness"] = {{"d", w.d},
                                {"max_modulus", w.max_modulus},
                                {"modulus_ok", w.modulus_ok},
                                {"own_zero_residual", w.own_zero_residual},
                                {"vanishes_ok", w.vanishes_ok},
                                {"next_zero_min_modulus", w.next_zero_min_modulus},
                                {"strict_ok", w.strict_ok},
                                {"note", w.note}};
                s << "max |F_n| on torus grid: " << w.max_modulus << (w.modulus_ok ? " (<= 1)" : " (EXCEEDS 1)")
                  << "\n|F_n| at own zero tuples: " << w.own_zero_residual
                  << "\nmin |F_n| at new zeros of F_{n+1}: " << w.next_zero_min_modulus
                  << (w.strict_ok ? " (nonzero: strictness evidence)" : " (no strictness evidence)") << "\nnote: "
                  << w.note << "\n";
            }
            emit(j, s.str(), g);
        } else if (*ex_cmd) {
            const unsigned cap = g.cap_given ? g.cap : 2 * N;
            const auto r = paper_example(N, cap, g.seed, points);
            json j{{"N", N},
                   {"cap", cap},
                   {"norm", enclosure_json(r.norm)},
                   {"expected_norm", fraction_string(r.expected_norm)},
                   {"norm_matches", r.norm.exact && r.norm.lower == r.expected_norm},
                   {"elementary", series_json(r.elementary)},
                   {"composition_deviation", r.composition_deviation},
                   {"points", r.points}};
            std::ostringstream s;
            s.precision(6);
            s << "f_" << N << " = " << render(r.f) << "\n";
            s << "wiener_norm: " << enclosure_text(r.norm) << "  expected sum 1/n^2 = "
              << fraction_string(r.expected_norm) << "\n";
            s << "elementary form: " << render(r.elementary) << "\n";
            s << "composition deviation over " << r.points << " points in (0.7 D)^2: " << r.composition_deviation
              << "\n";
            emit(j, s.str(), g);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 1;
    } catch (const json::exception& e) {
        std::cerr << "malformed JSON: " << e.what() << '\n';
        return 1;
    } catch (const NumericalBreakdown& e) {
        std::cerr << "numerical breakdown: " << e.what() << '\n';
        return 3;
    } catch (const Error& e) {
        std::cerr << "precondition violated: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
