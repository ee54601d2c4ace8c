#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace invcoef {

/// Exact arbitrary-precision rational, always canonical (lowest terms,
/// positive denominator).
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q". Decimal notation is rejected; a zero
/// denominator is rejected. Throws ParseError.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, else "p/q".
std::string to_string(const Rational& q);

double to_double(const Rational& q);

inline Rational rat(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational abs_value(const Rational& q) { return abs(q); }

}  // namespace invcoef
