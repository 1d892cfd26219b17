#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace fsk {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p/q" or "p"; decimal points are rejected so that verdicts never depend on
// floating-point parsing. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);  // "p/q", or "p" when integral

// Decimal rendering truncated toward zero, for human-readable reports only.
std::string to_decimal(const Rational& value, int digits = 6);

Integer floor(const Rational& value);

// floor(value^(1/degree)) for value >= 0, degree >= 1.
Integer iroot(const Integer& value, unsigned degree);

// Rational bracket [lo, hi] around value^(1/degree) with hi - lo <= 1/scale.
// lo == hi when the root is exactly representable at that scale.
struct RootBracket {
    Rational lo;
    Rational hi;
};
RootBracket root_bracket(const Integer& value, unsigned degree, const Integer& scale);

}  // namespace fsk
