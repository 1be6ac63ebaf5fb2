#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "tbcurv/errors.hpp"

namespace tbcurv {

// Exact arithmetic foundation. Rationals are always stored reduced with
// positive denominator; floats never enter the exact pipeline.
using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline int sign(const Rational& q) { return q.sign(); }

inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

/// Base-10 integer from a digit string; immune to the octal reading a
/// leading zero would otherwise trigger in the cpp_int constructor.
inline Integer integer_from_digits(std::string_view digits) {
    std::size_t k = 0;
    while (k + 1 < digits.size() && digits[k] == '0') ++k;
    return Integer(std::string(digits.substr(k)));
}

/// "p/q" (or just "p" when q == 1); exact, re-parseable.
inline std::string to_fraction_string(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

/// Parses a scalar rational: optional sign, then "p", "p/q" or a decimal
/// literal. Decimals are exact ("0.01" -> 1/100). Throws parse_error.
inline Rational parse_rational(std::string_view text) {
    std::size_t i = 0;
    const auto fail = [&](const char* what) -> Rational { throw parse_error(what, i); };
    const auto skip_ws = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    skip_ws();
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        negative = text[i] == '-';
        ++i;
    }
    skip_ws();
    const auto digits = [&]() -> std::string {
        std::string d;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') d += text[i++];
        if (d.empty()) fail("expected digits");
        return d;
    };
    Rational value{integer_from_digits(digits())};
    if (i < text.size() && text[i] == '.') {
        ++i;
        const std::string frac = digits();
        Integer scale = 1;
        for (std::size_t k = 0; k < frac.size(); ++k) scale *= 10;
        value += Rational(integer_from_digits(frac), scale);
    } else if (i < text.size() && text[i] == '/') {
        ++i;
        skip_ws();
        const Integer den = integer_from_digits(digits());
        if (den == 0) fail("zero denominator");
        value /= Rational(den);
    }
    skip_ws();
    if (i != text.size()) fail("trailing characters");
    return negative ? Rational(-value) : value;
}

}  // namespace tbcurv
