#include "fsk/rational.hpp"

#include <stdexcept>

namespace fsk {
namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
    if (text.empty()) throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
    std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (start == text.size()) throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
    for (std::size_t i = start; i < text.size(); ++i)
        if (text[i] < '0' || text[i] > '9')
            throw std::invalid_argument("malformed rational '" + std::string(whole) + "' (expected p/q with integers)");
    Integer value(std::string(text.substr(start)));
    return text[0] == '-' ? Integer(-value) : value;
}

Integer pow(const Integer& base, unsigned exponent) {
    Integer out = 1;
    for (unsigned i = 0; i < exponent; ++i) out *= base;
    return out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
    const Integer num = parse_integer(text.substr(0, slash), text);
    const Integer den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) throw std::invalid_argument("rational '" + std::string(text) + "' has zero denominator");
    return Rational(num, den);
}

std::string to_string(const Integer& value) { return value.str(); }

std::string to_string(const Rational& value) {
    const Integer num = boost::multiprecision::numerator(value);
    const Integer den = boost::multiprecision::denominator(value);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Integer floor(const Rational& value) {
    const Integer num = boost::multiprecision::numerator(value);
    const Integer den = boost::multiprecision::denominator(value);
    Integer q = num / den;  // truncates toward zero
    if (num < 0 && q * den != num) q -= 1;
    return q;
}

std::string to_decimal(const Rational& value, int digits) {
    const bool negative = value < 0;
    const Rational magnitude = negative ? Rational(-value) : value;
    Integer scale = pow(Integer(10), static_cast<unsigned>(digits));
    const Integer scaled = floor(magnitude * scale);
    std::string body = Integer(scaled / scale).str();
    if (digits > 0) {
        std::string frac = Integer(scaled % scale).str();
        frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
        body += "." + frac;
    }
    return (negative && scaled != 0 ? "-" : "") + body;
}

Integer iroot(const Integer& value, unsigned degree) {
    if (value < 0) throw std::invalid_argument("iroot of a negative value");
    if (degree == 0) throw std::invalid_argument("iroot degree must be positive");
    if (degree == 1 || value < 2) return value;
    // Binary search on [0, 2^(bits/degree + 1)).
    const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(value)) + 1;
    Integer lo = 0;
    Integer hi = Integer(1) << (bits / degree + 1);
    while (hi - lo > 1) {
        const Integer mid = (lo + hi) / 2;
        if (pow(mid, degree) <= value) lo = mid;
        else hi = mid;
    }
    return lo;
}

RootBracket root_bracket(const Integer& value, unsigned degree, const Integer& scale) {
    // floor(scale * value^(1/d)) = iroot(value * scale^d, d).
    const Integer scaled = iroot(value * pow(scale, degree), degree);
    RootBracket out{Rational(scaled, scale), Rational(scaled, scale)};
    if (pow(scaled, degree) != value * pow(scale, degree)) out.hi = Rational(scaled + 1, scale);
    return out;
}

}  // namespace fsk
