#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <type_traits>

namespace ccsp {

// Two numeric modes, fixed per instance: exact 64-bit integer scores and
// finite binary floats compared with a 1e-9 tolerance. All comparisons in
// generic code go through these traits so both modes share one code path.
template <class S>
struct score_traits;

template <>
struct score_traits<long long> {
  static constexpr bool exact = true;
  static bool eq(long long a, long long b) { return a == b; }
  static bool lt(long long a, long long b) { return a < b; }
  static bool le(long long a, long long b) { return a <= b; }
  static bool valid(long long v) { return v >= 0; }
};

template <>
struct score_traits<double> {
  static constexpr bool exact = false;
  static constexpr double eps = 1e-9;
  static bool eq(double a, double b) { return std::fabs(a - b) <= eps; }
  static bool lt(double a, double b) { return a < b - eps; }
  static bool le(double a, double b) { return a <= b + eps; }
  static bool valid(double v) { return std::isfinite(v) && v >= 0.0; }
};

template <class S>
concept ScoreType = std::is_same_v<S, long long> || std::is_same_v<S, double>;

}  // namespace ccsp
