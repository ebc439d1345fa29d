#pragma once

#include <algorithm>

namespace mlsim {

// Closed subinterval of [0,1] used for mutual restriction intervals.
// The empty interval is encoded as hi < lo.
struct Interval {
  double lo{1.0};
  double hi{0.0};

  static Interval empty() { return {1.0, 0.0}; }
  static Interval unit() { return {0.0, 1.0}; }
  static Interval of(double lo, double hi) { return {lo, hi}; }

  bool is_empty() const { return hi < lo; }

  bool operator==(const Interval& other) const {
    if (is_empty() && other.is_empty()) return true;
    return lo == other.lo && hi == other.hi;
  }
};

// Lane-overlap measure z - y, or 0 for the empty interval.
inline double measure(const Interval& iv) {
  return std::max(0.0, iv.hi - iv.lo);
}

}  // namespace mlsim
