#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace arcs {

// Closed real interval, possibly unbounded on either side, possibly empty.
// When `empty` is set the bounds carry no meaning and consumers must ignore
// them.
struct Interval {
  double lower = -std::numeric_limits<double>::infinity();
  double upper = std::numeric_limits<double>::infinity();
  bool empty = false;

  static Interval unbounded() { return {}; }

  static Interval closed(double lo, double hi) {
    if (std::isnan(lo) || std::isnan(hi) || lo > hi) {
      throw std::invalid_argument("Interval::closed: requires lo <= hi");
    }
    return {lo, hi, false};
  }

  static Interval make_empty() {
    return {std::numeric_limits<double>::quiet_NaN(),
            std::numeric_limits<double>::quiet_NaN(), true};
  }

  bool contains(double x) const { return !empty && lower <= x && x <= upper; }

  bool bounded() const {
    return !empty && std::isfinite(lower) && std::isfinite(upper);
  }

  double width() const {
    if (empty) return 0.0;
    return upper - lower;  // +inf when either side is unbounded
  }
};

inline Interval intersect(const Interval& a, const Interval& b) {
  if (a.empty || b.empty) return Interval::make_empty();
  const double lo = std::max(a.lower, b.lower);
  const double hi = std::min(a.upper, b.upper);
  if (lo > hi) return Interval::make_empty();
  return {lo, hi, false};
}

}  // namespace arcs
