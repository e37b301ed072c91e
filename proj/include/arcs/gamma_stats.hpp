#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "arcs/compensated_sum.hpp"

namespace arcs {

// Online sufficient statistics of a scalar autoregression sample:
//
//   gamma0 = sum_{t=1..T} y_{t-1}^2
//   gamma1 = sum_{t=1..T} y_{t-1} y_t
//
// Both sums are compensated: gamma0 grows like T^2 on unit-root paths, and
// batch equivalence is required to 1e-9 relative at T = 1e5. Value type;
// update() folds in one observation.
class GammaStats {
 public:
  explicit GammaStats(double y0) : last_(y0) {}

  void update(double y) {
    if (!std::isfinite(y)) {
      throw std::invalid_argument("GammaStats::update: non-finite observation");
    }
    gamma0_.add(last_ * last_);
    gamma1_.add(last_ * y);
    ++count_;
    last_ = y;
  }

  double gamma0() const { return gamma0_.value(); }
  double gamma1() const { return gamma1_.value(); }
  std::int64_t count() const { return count_; }
  double last() const { return last_; }

  // Least-squares estimate gamma1/gamma0 of the autoregressive coefficient.
  double ls_estimate() const {
    if (gamma0() <= 0.0) {
      throw std::domain_error("ls_estimate: undefined while gamma0 == 0");
    }
    return gamma1() / gamma0();
  }

 private:
  CompensatedSum gamma0_;
  CompensatedSum gamma1_;
  std::int64_t count_ = 0;
  double last_ = 0.0;
};

}  // namespace arcs
