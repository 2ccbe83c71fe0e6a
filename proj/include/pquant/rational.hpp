#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace pquant {

/// Exact rational scalar. GMP keeps every result reduced with a positive
/// denominator, so equality of values is equality of representations.
using Rat = mpq_class;

/// a/b in lowest terms. Prefer this over the two-argument mpq_class
/// constructor, which does not reduce.
inline Rat frac(long a, long b) {
  Rat q(a, b);
  q.canonicalize();
  return q;
}

/// Canonical "num/den" text, denominator always printed ("3/1").
std::string to_string(const Rat& q);

/// Accepts "a/b" or "a" with optional sign; throws ParseError otherwise.
Rat parse_rat(std::string_view text);

}  // namespace pquant
