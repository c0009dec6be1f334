#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace rshare {

// All shares, averages and indices are exact rationals. cpp_rational keeps
// values in lowest terms with a positive denominator, which is exactly the
// canonical form the reports serialize.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Canonical "p/q" form, lowest terms, always with the slash ("5/3", "1/1").
std::string fraction_str(const Rational& r);

// Inverse of fraction_str. Also accepts a bare integer. Throws InvalidInput.
Rational parse_fraction(std::string_view text);

// Fixed-significand decimal rendering, round-half-even. Never uses exponent
// notation; "0" for zero.
std::string decimal_str(const Rational& r, int significant_digits = 12);

} // namespace rshare
