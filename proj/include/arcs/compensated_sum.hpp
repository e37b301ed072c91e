#pragma once

#include <cmath>

namespace arcs {

// Neumaier's variant of Kahan summation: keeps a running compensation term so
// long accumulations of mixed-magnitude terms retain near-full double
// precision. Value type, trivially copyable.
class CompensatedSum {
 public:
  CompensatedSum() = default;
  explicit CompensatedSum(double init) : sum_(init) {}

  void add(double value) {
    const double t = sum_ + value;
    if (std::abs(sum_) >= std::abs(value)) {
      comp_ += (sum_ - t) + value;
    } else {
      comp_ += (value - t) + sum_;
    }
    sum_ = t;
  }

  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace arcs
