#pragma once

#include <complex>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace polysym {

/// Arbitrary-precision rational, always kept in lowest terms with positive denominator.
using Rational = mpq_class;

/// Parses "p", "p/q" or a finite decimal such as "-0.125" exactly.
Rational parse_rational(std::string_view text);

/// Always renders "p/q", including "q = 1".
std::string fraction_string(const Rational& value);

/// Exact value of a finite double.
Rational rational_from_double(double value);

/// n/d in lowest terms.
inline Rational ratio(long n, unsigned long d) {
    Rational r(n, d);
    r.canonicalize();
    return r;
}

inline double to_double(const Rational& value) { return value.get_d(); }

inline Rational abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

Rational pow(const Rational& base, unsigned exponent);

struct ComplexRational {
    Rational re{0};
    Rational im{0};

    ComplexRational() = default;
    ComplexRational(Rational real) : re(std::move(real)) {}
    ComplexRational(Rational real, Rational imag) : re(std::move(real)), im(std::move(imag)) {}
    ComplexRational(long real) : re(real) {}

    static ComplexRational i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }

    /// |re| + |im|, the rectangular majorant of the modulus.
    Rational rect_abs() const { return abs(re) + abs(im); }

    std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

    ComplexRational& operator+=(const ComplexRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    ComplexRational& operator-=(const ComplexRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    ComplexRational& operator*=(const ComplexRational& o) {
        Rational r = re * o.re - im * o.im;
        Rational m = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(m);
        return *this;
    }
    ComplexRational& operator*=(const Rational& s) {
        re *= s;
        im *= s;
        return *this;
    }

    friend ComplexRational operator+(ComplexRational a, const ComplexRational& b) { return a += b; }
    friend ComplexRational operator-(ComplexRational a, const ComplexRational& b) { return a -= b; }
    friend ComplexRational operator*(ComplexRational a, const ComplexRational& b) { return a *= b; }
    friend ComplexRational operator*(ComplexRational a, const Rational& s) { return a *= s; }
    friend ComplexRational operator-(const ComplexRational& a) { return {Rational(-a.re), Rational(-a.im)}; }
    friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
        return a.re == b.re && a.im == b.im;
    }

    /// Throws PreconditionError on division by zero.
    ComplexRational inverse() const;
};

/// Human-readable form used by the expression renderer: "3/4", "-i", "(1/2+2*i)".
std::string to_string(const ComplexRational& c);

} // namespace polysym
