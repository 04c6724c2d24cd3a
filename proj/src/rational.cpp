#include "polysym/rational.hpp"

#include <cctype>
#include <cmath>

#include "polysym/errors.hpp"

namespace polysym {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }

    Rational value;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        auto num = body.substr(0, slash);
        auto den = body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw ParseError("malformed rational '" + std::string(text) + "'", 1);
        mpz_class d{std::string(den), 10};
        if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", 1);
        value = Rational(mpz_class(std::string(num), 10), d);
        value.canonicalize();
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        auto whole = body.substr(0, dot);
        auto frac = body.substr(dot + 1);
        if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
            (whole.empty() && frac.empty()))
            throw ParseError("malformed decimal '" + std::string(text) + "'", 1);
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        mpz_class digits{std::string(whole.empty() ? "0" : whole) + std::string(frac), 10};
        value = Rational(digits, scale);
        value.canonicalize();
    } else {
        if (!all_digits(body)) throw ParseError("malformed number '" + std::string(text) + "'", 1);
        value = Rational(mpz_class(std::string(body), 10));
    }
    if (negative) value = -value;
    return value;
}

std::string fraction_string(const Rational& value) {
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational rational_from_double(double value) {
    if (!std::isfinite(value)) throw PreconditionError("non-finite value has no rational form");
    Rational r;
    mpq_set_d(r.get_mpq_t(), value);
    return r;
}

Rational pow(const Rational& base, unsigned exponent) {
    Rational result;
    mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
    result.canonicalize();
    return result;
}

ComplexRational ComplexRational::inverse() const {
    Rational n = re * re + im * im;
    if (sgn(n) == 0) throw PreconditionError("division by zero");
    return {Rational(re / n), Rational(-im / n)};
}

std::string to_string(const ComplexRational& c) {
    if (c.is_real()) return c.re.get_str();
    if (sgn(c.re) == 0) {
        if (c.im == 1) return "i";
        if (c.im == -1) return "-i";
        return c.im.get_str() + "*i";
    }
    std::string im = abs(c.im) == 1 ? "i" : abs(c.im).get_str() + "*i";
    return "(" + c.re.get_str() + (sgn(c.im) < 0 ? "-" : "+") + im + ")";
}

} // namespace polysym
