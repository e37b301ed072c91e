#pragma once

#include <iosfwd>

#include "arcs/gamma_stats.hpp"
#include "arcs/interval.hpp"
#include "arcs/martingale.hpp"

namespace arcs {

// Anytime-valid confidence interval at the current statistics: the closed
// sublevel set {alpha : log_mixture(alpha) <= log(1/delta)}, i.e.
//
//   center     gamma1/gamma0
//   half-width sqrt(((a^2 g0 + 1) / (a^2 g0^2)) * log((a^2 g0 + 1) / delta^2))
//
// gamma0 == 0 yields the unbounded interval: the martingale is still 1 at
// every alpha, so no value can be excluded. Never empty; always contains the
// least-squares estimate.
Interval strong_interval(const GammaStats& stats, const MixtureParams& params,
                         double delta);

// One observation stream's state: this step's interval, the running
// intersection over all steps so far, and whether the intersection has
// become empty (model rejection). Value type; evolve with step().
struct ConfSeqState {
  GammaStats stats;
  MixtureParams params;
  double delta = 0.01;
  Interval current;   // this step's interval
  Interval running;   // intersection over all steps so far
  bool rejected = false;

  static ConfSeqState start(double y0, const MixtureParams& params,
                            double delta);

  // Folds in one observation: updates the statistics, recomputes the current
  // interval, shrinks the running intersection, and sets the rejection flag.
  void step(double y);
};

// Union over alpha in `running` of the per-alpha prediction intervals
// [alpha * y_t - z, alpha * y_t + z], where z is the upper delta_pred/2
// standard-normal quantile. Since alpha * y_t is monotone in alpha this is
//
//   [min(l y_t, u y_t) - z, max(l y_t, u y_t) + z].
//
// delta_pred is a separate per-step budget; no joint time-uniform guarantee
// is claimed. Throws std::domain_error when `running` is empty (rejected
// model); an unbounded `running` gives an unbounded prediction interval
// unless y_t == 0.
Interval prediction_interval(const Interval& running, double y_t,
                             double delta_pred);

// Streaming report rows:
//   t,y,gamma0,gamma1,center,lower,upper,run_lower,run_upper,rejected
// Infinite bounds render as -inf/inf; an empty running intersection renders
// as nan bounds with rejected=true.
void write_report_header(std::ostream& out);
void write_report_row(std::ostream& out, const ConfSeqState& state);

}  // namespace arcs
