#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polysym/errors.hpp"
#include "polysym/series_io.hpp"
#include "test_support.hpp"

using namespace polysym;
using namespace polysym::testing;

TEST_CASE("text golden") {
    auto f = series(2, 4, {{{2, 0}, 1}, {{1, 1}, ComplexRational(q(-3, 2), q(1, 4))}});
    CHECK(to_text(f) == "# z dim=2 cap=4\n2,0\t1/1\t0/1\n1,1\t-3/2\t1/4\n");
    CHECK(to_text(TruncatedSeries(3, 1)) == "# z dim=3 cap=1\n");

    auto tailed = TruncatedSeries::from_terms(1, 1, TermMap{{Monomial{1}, 1}}, q(1, 8));
    CHECK(to_text(tailed) == "# z dim=1 cap=1\n1\t1/1\t0/1\ntail\t1/8\n");

    ElementaryTermMap m{{Monomial{2, 0}, 1}, {Monomial{0, 1}, -2}};
    CHECK(to_text(ElementarySeries::from_terms(2, 2, m)) == "# e dim=2 cap=2\n2,0\t1/1\t0/1\n0,1\t-2/1\t0/1\n");
}

TEST_CASE("text round trip") {
    std::mt19937_64 rng(103);
    for (int k = 0; k < 50; ++k) {
        auto f = random_poly(rng, 1 + k % 4, 6, 5, 6, k % 2 == 0);
        auto back = series_from_text(to_text(f));
        CHECK(back == f);
        CHECK(back.cap() == f.cap());
        CHECK(back.tail_bound() == f.tail_bound());
    }
    ElementaryTermMap m{{Monomial{1, 1, 0}, ComplexRational(q(2, 3), 1)}, {Monomial{0, 0, 1}, -1}};
    auto g = ElementarySeries::from_terms(3, 3, m);
    CHECK(elementary_from_text(to_text(g)) == g);
}

TEST_CASE("headerless input and inference") {
    auto f = series_from_text("2,0\t1\t0\n0,2\t1\t0\n");
    CHECK(f.dim() == 2);
    CHECK(f.cap() == 2);
    CHECK(f == series(2, 2, {{{2, 0}, 1}, {{0, 2}, 1}}));
    CHECK(series_from_text("1,0\t0.5\t-0.25\n", std::nullopt, 7).cap() == 7);
    CHECK(series_from_text("", 3).dim() == 3);
    // Duplicate lines merge.
    CHECK(series_from_text("1\t1\t0\n1\t1\t0\n") == series(1, 1, {{{1}, 2}}));
    // Terms above the requested cap fall into the tail.
    auto t = series_from_text("3\t-2\t0\n", std::nullopt, 1);
    CHECK(t.terms().empty());
    CHECK(t.tail_value() == 2);
}

TEST_CASE("malformed text") {
    auto position = [](std::string_view text) -> std::size_t {
        try {
            read_text(text);
        } catch (const ParseError& e) {
            return e.position();
        }
        return 0;
    };
    CHECK(position("1,0\tx\t0\n") == 5);
    CHECK(position("1,0\t1\n") == 1);
    CHECK(position("1,0\t1\t0\n0,a\t1\t0\n") == 11);
    CHECK(position("") == 1);
    CHECK(position("1,0\t1\t0\n1\t1\t0\n") == 9);
    CHECK(position("tail\t-1\n1\t1\t0\n") > 0);
    CHECK_THROWS_AS(read_text("# z dim=2\n1\t1\t0\n"), DimensionMismatch);
    CHECK_THROWS_AS(read_text("# z dim=2\n", 3), DimensionMismatch);
    CHECK_THROWS_AS(series_from_text("# e dim=2\n1,0\t1\t0\n"), PreconditionError);
    CHECK_THROWS_AS(elementary_from_text("1,0\t1\t0\n"), PreconditionError);
}

TEST_CASE("complex and point formatting") {
    std::mt19937_64 rng(107);
    for (int k = 0; k < 100; ++k) {
        auto z = random_point(rng, 3);
        CHECK(parse_point(format_point(z)) == z);
    }
    CHECK(parse_complex("0.5") == std::complex<double>(0.5, 0));
    CHECK(parse_complex("-0.25i") == std::complex<double>(0, -0.25));
    CHECK(parse_complex("i") == std::complex<double>(0, 1));
    CHECK(parse_complex("-i") == std::complex<double>(0, -1));
    CHECK(parse_complex("1e-3+2e+1i") == std::complex<double>(1e-3, 20));
    CHECK(parse_point("(0.5,-0.5)") == Point{0.5, -0.5});
    CHECK_THROWS_AS(parse_complex(""), ParseError);
    CHECK_THROWS_AS(parse_complex("abc"), ParseError);
    CHECK_THROWS_AS(parse_point("0.5,x"), ParseError);
}

TEST_CASE("parse_rational reads decimal digits") {
    CHECK(parse_rational("0.25") == q(1, 4));
    CHECK(parse_rational("0.05") == q(1, 20));
    CHECK(parse_rational("-0.125") == q(-1, 8));
    CHECK(parse_rational("007/010") == q(7, 10));
    CHECK(parse_rational("010") == 10);
    CHECK(parse_rational(".5") == q(1, 2));
    CHECK(parse_rational("3.") == 3);
    CHECK_THROWS_AS(parse_rational("."), ParseError);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("0x10"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
}
