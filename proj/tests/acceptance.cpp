// Acceptance gate: one [PASS]/[FAIL] line per criterion.
//
//   acceptance        run every criterion
//   acceptance N      run criterion N only (exit status reflects that criterion)

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "polysym/corona.hpp"
#include "polysym/elementary.hpp"
#include "polysym/errors.hpp"
#include "polysym/matrix.hpp"
#include "polysym/parser.hpp"
#include "polysym/symmetry.hpp"
#include "polysym/witnesses.hpp"
#include "test_support.hpp"

using namespace polysym;
using namespace polysym::testing;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what) {
        if (!cond && pass) detail << what;
        pass = pass && cond;
    }
};

struct Criterion {
    int id;
    const char* title;
    double time_limit_s; // 0 means no limit
    std::function<void(Outcome&)> run;
};

TruncatedSeries sum_of_squares(unsigned cap) {
    const auto z = TruncatedSeries::variable(2, cap, 0);
    const auto w = TruncatedSeries::variable(2, cap, 1);
    return z * z + w * w;
}

Rational basel(unsigned N) {
    Rational s = 0;
    for (unsigned n = 1; n <= N; ++n) s += q(1, static_cast<unsigned long>(n) * n);
    return s;
}

void wiener_identity(Outcome& out) {
    const auto base = sum_of_squares(20);
    auto p = TruncatedSeries::constant(2, 20, 1);
    for (unsigned n = 1; n <= 10; ++n) {
        p = p * base;
        const auto norm = wiener_norm(p);
        const Rational expected = pow(Rational(2), n);
        out.require(norm.exact && norm.lower == expected && norm.upper == expected,
                    "n=" + std::to_string(n) + ": got [" + fraction_string(norm.lower) + ", " +
                        fraction_string(norm.upper) + "]");
    }
    out.detail << "||(z^2+w^2)^n||_1 = 2^n exactly for n=1..10";
}

void example_norm(Outcome& out) {
    Rational last;
    for (unsigned N = 1; N <= 10; ++N) {
        const auto norm = wiener_norm(paper_example_series(N, 20));
        out.require(norm.exact && norm.upper == basel(N) && norm.lower == basel(N),
                    "N=" + std::to_string(N) + ": got " + fraction_string(norm.upper) + ", expected " +
                        fraction_string(basel(N)));
        last = norm.upper;
    }
    const double gap = std::numbers::pi * std::numbers::pi / 6 - to_double(last);
    out.require(gap >= 0 && gap < 0.095, "N=10 distance to pi^2/6 is " + std::to_string(gap) + "; ");
    out.detail << "||f_N||_1 = sum 1/n^2 for N=1..10; ||f_10||_1 = " << fraction_string(last)
               << ", pi^2/6 - ||f_10||_1 = " << gap;
}

void elementary_golden(Outcome& out) {
    const auto g = series_to_elementary(paper_example_series(3, 6), 6);
    struct Golden {
        const char* name;
        Monomial m;
        Rational value;
    };
    const std::vector<Golden> table{
        {"e2", Monomial{0, 1}, q(-1)},       {"e1^2", Monomial{2, 0}, q(1, 2)},
        {"e2^2", Monomial{0, 2}, q(1, 4)},   {"e1^2*e2", Monomial{2, 1}, q(-1, 2)},
        {"e2^3", Monomial{0, 3}, q(-1, 9)},
    };
    std::ostringstream mismatches;
    for (const auto& row : table) {
        const auto got = g.coefficient(row.m);
        if (!(got == ComplexRational(row.value))) {
            out.pass = false;
            mismatches << " " << row.name << ": expected " << fraction_string(row.value) << ", got "
                       << to_string(got) << ";";
        }
    }
    if (out.pass) {
        out.detail << "all five coefficients match; full result " << render(g);
    } else {
        out.detail << "mismatch:" << mismatches.str() << " full result " << render(g)
                   << ". Independent check: the e1^2*e2 term can only come from (e1^2 - 2 e2)^2 / 16,"
                   << " whose e1^2*e2 coefficient is -4/16 = -1/4, so the expected -1/2 is not attainable.";
    }
}

ElementarySeries random_epoly(std::mt19937_64& rng, std::size_t d, unsigned max_weight) {
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 3);
    std::uniform_int_distribution<unsigned> weight(0, max_weight);
    ElementaryTermMap m;
    for (int t = 0; t < 5; ++t) {
        unsigned budget = weight(rng);
        Monomial e(d);
        while (budget > 0) {
            std::uniform_int_distribution<std::size_t> slot(0, std::min<std::size_t>(d, budget) - 1);
            const auto j = slot(rng);
            ++e.exps[j];
            budget -= static_cast<unsigned>(j + 1);
        }
        ComplexRational c(q(num(rng), static_cast<unsigned long>(den(rng))));
        auto [it, inserted] = m.try_emplace(e, c);
        if (!inserted) it->second += c;
    }
    return ElementarySeries::from_terms(d, max_weight, std::move(m));
}

void round_trips(Outcome& out) {
    std::mt19937_64 rng(2024);
    int sym_ok = 0, elem_ok = 0;
    for (int k = 0; k < 100; ++k) {
        const std::size_t d = 2 + k % 3;
        const auto p = symmetrize(random_poly(rng, d, 8, 8, 6));
        const bool ok = from_elementary(to_elementary(p), 8) == p;
        out.require(ok, "symmetric polynomial #" + std::to_string(k) + " failed; ");
        sym_ok += ok;
    }
    for (int k = 0; k < 100; ++k) {
        const std::size_t d = 2 + k % 3;
        const auto g = random_epoly(rng, d, 8);
        const bool ok = to_elementary(from_elementary(g, 8)) == g;
        out.require(ok, "e-polynomial #" + std::to_string(k) + " failed; ");
        elem_ok += ok;
    }
    out.detail << sym_ok << "/100 symmetric and " << elem_ok << "/100 elementary round trips exact";
}

void sum_of_squares_rewrite(Outcome& out) {
    const auto g = to_elementary(sum_of_squares(2));
    ElementaryTermMap expected{{Monomial{2, 0}, 1}, {Monomial{0, 1}, -2}};
    out.require(g == ElementarySeries::from_terms(2, 2, expected), "got " + render(g));
    out.detail << "z^2+w^2 -> " << render(g);
}

void diagonal_lift(Outcome& out) {
    std::mt19937_64 rng(6);
    int checked = 0;
    for (std::size_t d : {2, 3, 4}) {
        for (int k = 0; k < 50; ++k) {
            const auto g = random_poly(rng, 1, 6, 12, 5, k % 2 == 0);
            out.require(diagonal_D(lift_U(g, d)) == g, "DU g != g for d=" + std::to_string(d) + "; ");
            ++checked;

            const auto h = random_poly(rng, 1, 6, 12, 4);
            out.require(lift_U(g * h, d) == lift_U(g, d) * lift_U(h, d),
                        "U(gh) != U(g)U(h) for d=" + std::to_string(d) + "; ");
            const auto a = random_poly(rng, d, 5, 12, 4, true);
            const auto b = random_poly(rng, d, 5, 12, 4);
            out.require(diagonal_D(a * b) == diagonal_D(a) * diagonal_D(b),
                        "D(ab) != D(a)D(b) for d=" + std::to_string(d) + "; ");
        }
    }
    out.detail << "DU = id on " << checked << " univariate polynomials; D and U multiplicative on the same count";
}

void corona_suite(Outcome& out) {
    constexpr unsigned cap = 6;
    const auto z = TruncatedSeries::variable(2, cap, 0);
    const auto w = TruncatedSeries::variable(2, cap, 1);
    const auto one = TruncatedSeries::constant(2, cap, 1);
    const auto half = TruncatedSeries::constant(2, cap, ComplexRational(q(1, 2)));
    const std::vector<TruncatedSeries> fs{z + w, one + one - z - w};
    const std::vector<TruncatedSeries> gs{half + (z - w) * fs[1], half - (z - w) * fs[0]};

    const auto residual = verify_bezout(fs, gs);
    out.require(residual.upper == 0 && residual.lower == 0, "residual " + fraction_string(residual.upper) + "; ");
    const auto sym = symmetrize_solution(fs, gs);
    out.require(sym.size() == 2 && sym[0] == half && sym[1] == half, "symmetrized solution is not (1/2, 1/2); ");
    const Rational delta = delta_from_solution(sym);
    out.require(delta == 2, "delta_from_solution = " + fraction_string(delta) + "; ");
    const double sampled = corona_delta(fs, 64, 8);
    out.require(sampled >= 2.0 - 1e-9, "corona_delta = " + std::to_string(sampled) + "; ");
    out.detail << "residual 0, symmetrized (" << render(sym[0]) << ", " << render(sym[1]) << "), delta "
               << fraction_string(delta) << ", sampled delta " << sampled;
}

void projector(Outcome& out) {
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<int> coef(-3, 3);
    int symmetric_inputs = 0;
    for (int k = 0; k < 200; ++k) {
        const std::size_t d = 1 + k % 4;
        auto f = random_poly(rng, d, 5, 6, 5, k % 3 == 0);
        auto g = random_poly(rng, d, 5, 6, 5);
        if (k % 5 == 0) f = f + TruncatedSeries::from_terms(d, 6, {}, q(1, 16));
        // Every fourth input is symmetric by construction, to exercise both directions.
        if (k % 4 == 0) f = symmetrize(f);

        const auto sf = symmetrize(f);
        out.require(symmetrize(sf) == sf, "idempotence failed; ");
        const ComplexRational a(q(coef(rng), 2), q(coef(rng), 3));
        const ComplexRational b(q(coef(rng), 5));
        out.require(symmetrize(scale(f, a) + scale(g, b)) == scale(sf, a) + scale(symmetrize(g), b),
                    "linearity failed; ");
        const bool fixed = sf == f;
        out.require(fixed == is_symmetric(f), "fixed-point characterization failed; ");
        out.require(is_symmetric(sf), "image not symmetric; ");
        symmetric_inputs += fixed;
    }
    out.detail << "200 series (" << symmetric_inputs << " symmetric): idempotent, linear, fixed points = symmetric";
}

void quotient_geometry(Outcome& out) {
    std::mt19937_64 rng(9);
    constexpr double tol = 1e-9;
    for (int k = 0; k < 200; ++k) {
        const std::size_t d = 2 + k % 3;
        const auto x = random_point(rng, d), y = random_point(rng, d), u = random_point(rng, d);
        const double xy = quotient_dist(x, y), yx = quotient_dist(y, x);
        const double yu = quotient_dist(y, u), xu = quotient_dist(x, u);
        out.require(quotient_dist(x, x) <= tol, "d(x,x) != 0; ");
        out.require(xy >= 0 && std::abs(xy - yx) <= tol, "symmetry failed; ");
        out.require(xu <= xy + yu + tol, "triangle inequality failed; ");
        const auto perm = Permutation::all(d)[static_cast<std::size_t>(k) % Permutation::all(d).size()];
        out.require(quotient_dist(x, apply_perm_point(perm, x)) <= tol, "orbit distance nonzero; ");
    }

    for (int k = 0; k < 100; ++k) {
        const std::size_t d = 2 + k % 3;
        const auto z = random_point(rng, d);
        const auto c = canonical(z);
        for (const auto& sigma : Permutation::all(d))
            out.require(canonical(apply_perm_point(sigma, z)) == c, "canonical form not invariant; ");
    }

    int separated = 0, unseparated = 0;
    for (int k = 0; k < 100; ++k) {
        const std::size_t d = 2 + k % 3;
        const auto z = random_point(rng, d), w = random_point(rng, d);
        const bool distinct = separating_elementary(z, w, default_orbit_tolerance).has_value();
        out.require(distinct, "distinct orbits not separated; ");
        separated += distinct;

        const auto all = Permutation::all(d);
        const auto& sigma = all[static_cast<std::size_t>(k) % all.size()];
        const bool same = !separating_elementary(z, apply_perm_point(sigma, z), default_orbit_tolerance).has_value();
        out.require(same, "same orbit reported as separated; ");
        unseparated += same;
    }
    out.detail << "metric axioms on 200 triples, canonical invariance on 100 points, separation "
               << separated << "/100 distinct and " << unseparated << "/100 same-orbit pairs";
}

SeriesMatrix random_sl(std::mt19937_64& rng, std::size_t n) {
    constexpr unsigned cap = 12;
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    SeriesMatrix m = SeriesMatrix::identity(n, 2, cap);
    for (int step = 0; step < 4; ++step) {
        std::size_t i = idx(rng), j = idx(rng);
        while (j == i) j = idx(rng);
        std::vector<TruncatedSeries> e(n * n, TruncatedSeries(2, cap));
        for (std::size_t k = 0; k < n; ++k) e[k * n + k] = TruncatedSeries::constant(2, cap, 1);
        e[i * n + j] = random_poly(rng, 2, 1, cap, 3);
        m = multiply(m, SeriesMatrix(n, std::move(e)));
    }
    return m;
}

double column_norm(const std::vector<TruncatedSeries>& v, bool upper) {
    double s = 0.0;
    for (const auto& x : v) {
        const double n = to_double(upper ? wiener_norm(x).upper : wiener_norm(x).lower);
        s += n * n;
    }
    return std::sqrt(s);
}

void sl_homotopy(Outcome& out) {
    std::mt19937_64 rng(10);
    double worst_reconstruction = 0.0, worst_ratio = 0.0;
    int ratios = 0;
    for (int k = 0; k < 20; ++k) {
        const std::size_t n = 2 + k % 2;
        const auto m = random_sl(rng, n);
        for (const Rational& t : {q(0), q(1, 4), q(1, 2), q(3, 4), q(1)})
            out.require(has_unit_determinant(dilation_path(m, t)),
                        "det(M_t) != 1 at t=" + fraction_string(t) + "; ");

        const auto c = constant_part(m);
        const auto factors = factor_constant_sl(c, 1e-10);
        const double err = max_entry_distance(product(factors, n), c);
        worst_reconstruction = std::max(worst_reconstruction, err);
        out.require(err < 1e-10, "reconstruction error " + std::to_string(err) + "; ");

        const double bound = op_norm_bound(m);
        for (int s = 0; s < 10; ++s) {
            std::vector<TruncatedSeries> v;
            for (std::size_t i = 0; i < n; ++i) v.push_back(random_poly(rng, 2, 3, 12, 3, s % 2 == 0));
            const double denom = column_norm(v, true);
            if (denom == 0.0) {
                --s;
                continue;
            }
            const double ratio = column_norm(multiply(m, v), false) / denom;
            worst_ratio = std::max(worst_ratio, ratio / bound);
            out.require(ratio <= bound, "sampled ratio exceeds op_norm_bound; ");
            ++ratios;
        }
    }
    out.detail << "20 matrices: det(M_t) = 1 at 5 nodes, worst reconstruction error " << worst_reconstruction
               << ", " << ratios << " ratios with max ratio/bound " << worst_ratio;
}

void parser_suite(Outcome& out) {
    const auto lhs = parse_series("(z+w)^2-2*z*w", 2, 4);
    const auto rhs = parse_series("z^2+w^2", 2, 4);
    out.require(lhs == rhs && rhs == sum_of_squares(4), "(z+w)^2-2*z*w parsed to " + render(lhs) + "; ");
    const auto e = parse_elementary("s1^2-2*s2", 2, 4);
    out.require(e == to_elementary(rhs), "s1^2-2*s2 parsed to " + render(e) + "; ");

    static const std::vector<std::string> tokens{"z", "w", "z1", "z2", "e1", "e2", "s2", "i", "0", "2", "7",
                                                 "0.5", "1/", "+", "-", "*", "/", "^", "(", ")", " ", "$"};
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::size_t> tok(0, tokens.size() - 1);
    std::uniform_int_distribution<int> len(0, 20);
    std::uniform_int_distribution<int> byte(1, 255);
    int parsed = 0, rejected = 0, crashed = 0;
    for (int k = 0; k < 10000; ++k) {
        std::string text;
        for (int t = len(rng); t > 0; --t) text += tokens[tok(rng)];
        if (k % 7 == 0) text.insert(text.begin() + static_cast<long>(text.size() / 2), static_cast<char>(byte(rng)));
        try {
            parse(text, 2, 8, k % 2 == 0);
            ++parsed;
        } catch (const ParseError& err) {
            if (err.position() < 1 || err.position() > text.size() + 1) ++crashed;
            ++rejected;
        } catch (const PreconditionError&) {
            ++rejected;
        } catch (...) {
            ++crashed;
        }
    }
    out.require(crashed == 0, std::to_string(crashed) + " inputs escaped the error contract; ");
    out.detail << "golden parses match; fuzz: " << parsed << " parsed, " << rejected << " rejected, " << crashed
               << " crashes";
}

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all{
        {1, "Wiener norm identity ||(z^2+w^2)^n||_1 = 2^n", 1.0, wiener_identity},
        {2, "worked example norm ||f_N||_1 = sum 1/n^2", 5.0, example_norm},
        {3, "elementary expansion of f_3", 2.0, elementary_golden},
        {4, "fundamental theorem round trips", 30.0, round_trips},
        {5, "to_elementary(z^2+w^2) = e1^2 - 2 e2", 0.0, sum_of_squares_rewrite},
        {6, "diagonal restriction / mean lift", 0.0, diagonal_lift},
        {7, "corona suite for (z+w, 2-z-w)", 0.0, corona_suite},
        {8, "symmetrization projector", 0.0, projector},
        {9, "quotient geometry", 0.0, quotient_geometry},
        {10, "SL_n homotopy", 0.0, sl_homotopy},
        {11, "expression parser", 0.0, parser_suite},
    };
    return all;
}

bool run(const Criterion& c) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
        c.run(out);
    } catch (const std::exception& e) {
        out.pass = false;
        out.detail << " exception: " << e.what();
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0 && elapsed >= c.time_limit_s) {
        out.pass = false;
        out.detail << " (time limit " << c.time_limit_s << " s exceeded)";
    }
    std::cout << (out.pass ? "[PASS] " : "[FAIL] ") << c.id << ". " << c.title << ": " << out.detail.str() << " ["
              << elapsed << " s]\n";
    return out.pass;
}

} // namespace

int main(int argc, char** argv) {
    if (argc > 2) {
        std::cerr << "usage: acceptance [criterion]\n";
        return 2;
    }
    if (argc == 2) {
        const int id = std::atoi(argv[1]);
        for (const auto& c : criteria())
            if (c.id == id) return run(c) ? 0 : 1;
        std::cerr << "unknown criterion " << argv[1] << "\n";
        return 2;
    }
    int failed = 0;
    for (const auto& c : criteria()) failed += !run(c);
    std::cout << (criteria().size() - static_cast<std::size_t>(failed)) << "/" << criteria().size()
              << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
