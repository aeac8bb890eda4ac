#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace selfmod {

// All probabilities, discounts and values are exact rationals. Every input
// format (CLI flags, catalog files) parses to a rational, so no value in the
// system is ever rounded; theorem checks that claim exact equality really
// compare exactly.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Accepts "p/q", plain integers, and decimal literals ("0.9" -> 9/10).
// Throws ConfigError on anything else or on a zero denominator.
Rational parse_rational(std::string_view text);

// Canonical form: "p" when the denominator is 1, else "p/q", always reduced.
std::string format_rational(const Rational& r);

double to_double(const Rational& r);

// r^n for n >= 0.
Rational rational_pow(const Rational& r, unsigned n);

}  // namespace selfmod
