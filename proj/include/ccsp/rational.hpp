#pragma once

#include <gmpxx.h>

#include <string>

#include "ccsp/errors.hpp"

namespace ccsp {

// Exact rational arithmetic for Thiele weights, utilities and the LP solver.
using Rational = mpq_class;

inline Rational rational_of(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// mpq_class has no long long constructor; on LP64 targets long is as wide.
inline Rational to_rational(long long v) {
  static_assert(sizeof(long) == sizeof(long long));
  return Rational(static_cast<long>(v));
}

// Accepts "p" or "p/q"; the denominator must be non-zero (checked before
// canonicalize, which would otherwise divide by zero).
inline Rational parse_rational(const std::string& text) {
  try {
    Rational q(text);
    if (q.get_den() == 0) throw input_error("rational with zero denominator: " + text);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw input_error("not a rational number: '" + text + "'");
  }
}

// "p" when integral, "p/q" otherwise.
inline std::string rational_to_string(const Rational& q) { return q.get_str(); }

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

}  // namespace ccsp
