#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace csurg {

// All arithmetic in the library is exact. Integer is arbitrary precision,
// Rational is kept normalized (lowest terms, positive denominator) by the
// backend.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer num(const Rational& r) { return Integer(numerator(r)); }
inline Integer den(const Rational& r) { return Integer(denominator(r)); }

// Floor division with sign handling; b must be nonzero.
Integer floor_div(const Integer& a, const Integer& b);

// floor(r) as an Integer.
Integer rational_floor(const Rational& r);

bool is_integral(const Rational& r);

int sign_of(const Integer& x);
int sign_of(const Rational& x);

Integer gcd(const Integer& a, const Integer& b);

// "p/q" in lowest terms with q > 0; integers render without the "/1".
std::string format_rational(const Rational& r);

// Accepts "p", "p/q" and surrounding whitespace; normalizes sign and lowest
// terms. Throws ParseError on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

// Throws ParseError on anything but an optionally signed decimal integer.
Integer parse_integer(std::string_view text);

}  // namespace csurg
