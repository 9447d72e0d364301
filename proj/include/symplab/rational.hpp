#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace symplab {

/// Arbitrary precision rational. GMP keeps mpq values canonical (gcd 1,
/// positive denominator) after every arithmetic operation.
using Rational = mpq_class;

/// Parses "p", "p/q" or "-p/q" (surrounding whitespace allowed). Throws
/// ParseError on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& value);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

}  // namespace symplab
