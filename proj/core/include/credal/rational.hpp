#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace credal {

/// Exact arbitrary-precision rational. All probabilities, losses and game
/// values in this library are Rationals; no floating point enters any
/// computation path.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "p/q" or "p" (optional sign, q > 0 after normalization).
/// Throws std::invalid_argument on anything else, including floats.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" (or "p" when the denominator is 1).
std::string to_fraction_string(const Rational& r);

/// Display-only decimal approximation: 6 significant digits, round half
/// to even. Never feed the result back into a computation.
std::string to_decimal_string(const Rational& r);

std::string to_fraction_string(const std::vector<Rational>& v);

} // namespace credal
