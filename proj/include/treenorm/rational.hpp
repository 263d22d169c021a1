#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace treenorm {

// All norm arithmetic is exact: coefficients, block sums and squared norms
// are arbitrary-precision rationals. Irrational values (square roots) only
// appear at output time, as decimal strings of configurable length.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

Rational abs(const Rational& q);

// Accepts "p", "-p" or "p/q" (q > 0 after normalization).
Rational parse_rational(std::string_view text);

// Accepts everything parse_rational does, plus plain decimals such as
// "0.25" or "-1.5e-3", which are exact rationals p/10^k.
Rational parse_rational_or_decimal(std::string_view text);

std::string to_string(const Rational& q);

// floor(sqrt(n)); n must be >= 0.
BigInt isqrt(const BigInt& n);

// The exact square root of q when q is a perfect square of a rational.
std::optional<Rational> exact_sqrt(const Rational& q);

// sqrt(q) truncated to `digits` significant digits, rendered in plain
// positional notation ("1.4142...", "0.0031...", "141.42..."). q must be
// >= 0. Exact integer results still carry the full digit count so that
// renderings are uniform; callers wanting "2" instead of "2.000..." should
// test exact_sqrt first.
std::string sqrt_decimal(const Rational& q, unsigned digits = 50);

// Parses a plain positional decimal back into the exact rational p/10^k.
Rational decimal_to_rational(std::string_view text);

}  // namespace treenorm
