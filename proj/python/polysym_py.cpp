#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "polysym/corona.hpp"
#include "polysym/elementary.hpp"
#include "polysym/errors.hpp"
#include "polysym/matrix.hpp"
#include "polysym/parser.hpp"
#include "polysym/series_io.hpp"
#include "polysym/symmetry.hpp"
#include "polysym/witnesses.hpp"

namespace py = pybind11;
using namespace polysym;

namespace {

py::object to_fraction(const Rational& r) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    static py::object integer = py::module_::import("builtins").attr("int");
    return fraction(integer(r.get_num().get_str()), integer(r.get_den().get_str()));
}

Rational from_py_number(const py::handle& value) {
    if (py::isinstance<py::str>(value)) return parse_rational(value.cast<std::string>());
    // Floats keep their exact binary value; int and Fraction go through str().
    if (py::isinstance<py::float_>(value)) return rational_from_double(value.cast<double>());
    return parse_rational(py::str(value).cast<std::string>());
}

py::tuple enclosure(const NormEnclosure& n) { return py::make_tuple(to_fraction(n.lower), to_fraction(n.upper), n.exact); }

std::vector<std::uint32_t> exponents(const Monomial& m) { return m.exps; }

template <typename Map>
py::dict coefficient_dict(const Map& terms) {
    py::dict out;
    for (const auto& [m, c] : terms) {
        py::tuple key = py::cast(exponents(m));
        out[key] = c.is_real() ? to_fraction(c.re) : py::object(py::make_tuple(to_fraction(c.re), to_fraction(c.im)));
    }
    return out;
}

AlphaRule alpha_rule(const std::string& name) {
    if (name == "varying") return AlphaRule::varying_alpha_k;
    if (name == "fixed") return AlphaRule::fixed_alpha_n;
    throw PreconditionError("alpha rule must be 'varying' or 'fixed'");
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact truncated power series, symmetrization and the elementary symmetric basis.";

    auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<PreconditionError>(m, "PreconditionError", error);
    py::register_exception<DimensionMismatch>(m, "DimensionMismatch", error);
    py::register_exception<NumericalBreakdown>(m, "NumericalBreakdown", error);
    py::register_exception<ParseError>(m, "ParseError", error);

    py::class_<TruncatedSeries>(m, "Series")
        .def(py::init([](const std::string& expr, std::size_t dim, unsigned cap, bool allow_truncation) {
                 return parse_series(expr, dim, cap, allow_truncation);
             }),
             py::arg("expr"), py::arg("dim") = 2, py::arg("cap") = 8, py::arg("allow_truncation") = false)
        .def_static("from_text", [](const std::string& text) { return series_from_text(text); })
        .def_static(
            "constant", [](std::size_t dim, unsigned cap, const py::object& c) {
                return TruncatedSeries::constant(dim, cap, ComplexRational(from_py_number(c)));
            },
            py::arg("dim"), py::arg("cap"), py::arg("value"))
        .def_property_readonly("dim", &TruncatedSeries::dim)
        .def_property_readonly("cap", &TruncatedSeries::cap)
        .def_property_readonly("tail",
                               [](const TruncatedSeries& f) -> py::object {
                                   if (!f.tail_bound()) return py::none();
                                   return to_fraction(*f.tail_bound());
                               })
        .def("coefficients", [](const TruncatedSeries& f) { return coefficient_dict(f.terms()); })
        .def("to_text", [](const TruncatedSeries& f) { return to_text(f); })
        .def("wiener_norm", [](const TruncatedSeries& f) { return enclosure(wiener_norm(f)); })
        .def("__call__",
             [](const TruncatedSeries& f, const std::vector<std::complex<double>>& z) {
                 const auto e = evaluate(f, z);
                 return py::make_tuple(e.value, e.error_bound);
             })
        .def("sup_norm_lower", &sup_norm_lower, py::arg("resolution"))
        .def("dilate", [](const TruncatedSeries& f, const py::object& r) { return dilate(f, from_py_number(r)); })
        .def("symmetrize", &symmetrize)
        .def("is_symmetric", &is_symmetric)
        .def("to_elementary", [](const TruncatedSeries& f) { return to_elementary(f); })
        .def("series_to_elementary", [](const TruncatedSeries& f, unsigned cap) { return series_to_elementary(f, cap); },
             py::arg("cap"))
        .def("diagonal", &diagonal_D)
        .def("lift", &lift_U, py::arg("d"))
        .def("__add__", [](const TruncatedSeries& a, const TruncatedSeries& b) { return a + b; })
        .def("__sub__", [](const TruncatedSeries& a, const TruncatedSeries& b) { return a - b; })
        .def("__mul__", [](const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; })
        .def("__neg__", [](const TruncatedSeries& a) { return -a; })
        .def("__pow__", [](const TruncatedSeries& a, unsigned n) { return power(a, n); })
        .def("__eq__", [](const TruncatedSeries& a, const TruncatedSeries& b) { return a == b; })
        .def("__str__", [](const TruncatedSeries& f) { return render(f); })
        .def("__repr__", [](const TruncatedSeries& f) { return "Series('" + render(f) + "')"; });

    py::class_<ElementarySeries>(m, "ElementarySeries")
        .def(py::init([](const std::string& expr, std::size_t dim, unsigned cap) {
                 return parse_elementary(expr, dim, cap);
             }),
             py::arg("expr"), py::arg("dim") = 2, py::arg("cap") = 8)
        .def_static("from_text", [](const std::string& text) { return elementary_from_text(text); })
        .def_property_readonly("dim", &ElementarySeries::dim)
        .def_property_readonly("cap", &ElementarySeries::cap)
        .def("coefficients", [](const ElementarySeries& g) { return coefficient_dict(g.terms()); })
        .def("to_text", [](const ElementarySeries& g) { return to_text(g); })
        .def("expand", &from_elementary, py::arg("cap"))
        .def("__call__", [](const ElementarySeries& g, const std::vector<std::complex<double>>& s) {
            return evaluate_elementary(g, s);
        })
        .def("__eq__", [](const ElementarySeries& a, const ElementarySeries& b) { return a == b; })
        .def("__str__", [](const ElementarySeries& g) { return render(g); })
        .def("__repr__", [](const ElementarySeries& g) { return "ElementarySeries('" + render(g) + "')"; });

    m.def("compare_composition", [](const TruncatedSeries& f, const ElementarySeries& g, const std::vector<Point>& pts) {
        return compare_composition(f, g, pts);
    });

    m.def("canonical", [](const Point& z) { return canonical(z); }, py::arg("z"));
    m.def("orbit", [](const Point& z) { return orbit(z); }, py::arg("z"));
    m.def("quotient_dist", [](const Point& z, const Point& w) { return quotient_dist(z, w); }, py::arg("z"),
          py::arg("w"));
    m.def("elementary_values", [](const Point& z) { return elementary_values(z); }, py::arg("z"));
    m.def(
        "separating_elementary",
        [](const Point& z, const Point& w, double tol) { return separating_elementary(z, w, tol); }, py::arg("z"),
        py::arg("w"), py::arg("tol") = default_orbit_tolerance);
    m.def(
        "contraction_homotopy", [](double t, const Point& z) { return contraction_homotopy(t, z).canonical; }, py::arg("t"),
        py::arg("z"));

    m.def("verify_bezout", [](const std::vector<TruncatedSeries>& fs, const std::vector<TruncatedSeries>& gs) {
        return enclosure(verify_bezout(fs, gs));
    });
    m.def("symmetrize_solution", [](const std::vector<TruncatedSeries>& fs, const std::vector<TruncatedSeries>& gs) {
        return symmetrize_solution(fs, gs);
    });
    m.def("delta_from_solution",
          [](const std::vector<TruncatedSeries>& gs) { return to_fraction(delta_from_solution(gs)); });
    m.def(
        "corona_delta",
        [](const std::vector<TruncatedSeries>& fs, unsigned resolution, unsigned layers) {
            return corona_delta(fs, resolution, layers);
        },
        py::arg("fs"), py::arg("resolution") = 32, py::arg("layers") = 8);

    m.def(
        "factor_constant_sl",
        [](const std::vector<std::vector<std::complex<double>>>& rows, double tol) {
            const std::size_t n = rows.size();
            std::vector<std::complex<double>> flat;
            for (const auto& r : rows) {
                if (r.size() != n) throw DimensionMismatch("matrix must be square");
                flat.insert(flat.end(), r.begin(), r.end());
            }
            std::vector<py::tuple> out;
            // 1-based indices, as printed by the command-line tool.
            for (const auto& t : factor_constant_sl(ConstantMatrix(n, flat), tol))
                out.push_back(py::make_tuple(t.i + 1, t.j + 1, t.alpha));
            return out;
        },
        py::arg("matrix"), py::arg("tol") = 1e-10);
    m.def(
        "homotopy_residuals",
        [](const std::vector<std::vector<std::string>>& cells, std::size_t dim, unsigned cap, unsigned steps) {
            std::vector<TruncatedSeries> entries;
            for (const auto& row : cells) {
                if (row.size() != cells.size()) throw DimensionMismatch("matrix must be square");
                for (const auto& c : row) entries.push_back(parse_series(c, dim, cap));
            }
            std::vector<py::tuple> out;
            for (const auto& s : full_homotopy_sample(SeriesMatrix(cells.size(), entries), steps))
                out.push_back(py::make_tuple(s.t, s.det_residual, s.op_norm_bound));
            return out;
        },
        py::arg("matrix"), py::arg("dim") = 2, py::arg("cap") = 8, py::arg("steps") = 9);

    m.def(
        "blaschke_eval",
        [](unsigned n, std::complex<double> z, const std::string& rule) {
            return blaschke_eval({n, alpha_rule(rule)}, z);
        },
        py::arg("n"), py::arg("z"), py::arg("rule") = "varying");
    m.def(
        "paper_example",
        [](unsigned N, std::optional<unsigned> cap, std::uint64_t seed, std::size_t points) {
            const auto r = paper_example(N, cap.value_or(2 * N), seed, points);
            py::dict out;
            out["series"] = r.f;
            out["norm"] = enclosure(r.norm);
            out["expected_norm"] = to_fraction(r.expected_norm);
            out["elementary"] = r.elementary;
            out["composition_deviation"] = r.composition_deviation;
            return out;
        },
        py::arg("N"), py::arg("cap") = py::none(), py::arg("seed") = 0, py::arg("points") = 100);
}
