#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace exchkit {

// All weights in the exact layer are arbitrary-precision rationals; floating
// point appears only in the Monte Carlo layer and in report rendering.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Canonical "p/q" rendering: reduced terms, explicit denominator, e.g.
/// "2/3", "0/1", "-7/2".
std::string to_fraction_string(const Rational& r);

/// Parses "p/q" or a bare integer "p". Throws Error(ConfigInvalid) on
/// malformed input or zero denominator.
Rational parse_rational(std::string_view text);

double to_double(const Rational& r);

BigInt integer_pow(const BigInt& base, unsigned exponent);

} // namespace exchkit
