#include "arcs/confseq.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

#include "arcs/csv.hpp"
#include "arcs/normal.hpp"

namespace arcs {
namespace {

void validate_delta(double delta, const char* who) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument(std::string(who) +
                                ": delta must lie in (0, 1)");
  }
}

}  // namespace

Interval strong_interval(const GammaStats& stats, const MixtureParams& params,
                         double delta) {
  params.validate();
  validate_delta(delta, "strong_interval");
  const double g0 = stats.gamma0();
  if (g0 <= 0.0) {
    return Interval::unbounded();
  }
  const double a = params.a;
  const double a2g0 = a * a * g0;
  // log((a^2 g0 + 1) / delta^2), split so the log1p keeps small-g0 accuracy.
  const double log_term = std::log1p(a2g0) - 2.0 * std::log(delta);
  const double half_width = std::sqrt((a2g0 + 1.0) * log_term) / (a * g0);
  const double center = stats.gamma1() / g0;
  return Interval::closed(center - half_width, center + half_width);
}

ConfSeqState ConfSeqState::start(double y0, const MixtureParams& params,
                                 double delta) {
  params.validate();
  validate_delta(delta, "ConfSeqState");
  if (!std::isfinite(y0)) {
    throw std::invalid_argument("ConfSeqState: non-finite y0");
  }
  ConfSeqState state{GammaStats(y0), params, delta, Interval::unbounded(),
                     Interval::unbounded(), false};
  return state;
}

void ConfSeqState::step(double y) {
  stats.update(y);
  current = strong_interval(stats, params, delta);
  running = intersect(running, current);
  rejected = running.empty;
}

Interval prediction_interval(const Interval& running, double y_t,
                             double delta_pred) {
  validate_delta(delta_pred, "prediction_interval");
  if (running.empty) {
    throw std::domain_error(
        "prediction_interval: model rejected (empty running intersection)");
  }
  if (!std::isfinite(y_t)) {
    throw std::invalid_argument("prediction_interval: non-finite y_t");
  }
  const double z = normal_upper_quantile(delta_pred / 2.0);
  if (y_t == 0.0) {
    // alpha * 0 = 0 for every alpha, bounded even when running is not.
    return Interval::closed(-z, z);
  }
  if (!running.bounded()) {
    return Interval::unbounded();
  }
  const double e0 = running.lower * y_t;
  const double e1 = running.upper * y_t;
  return Interval::closed(std::min(e0, e1) - z, std::max(e0, e1) + z);
}

void write_report_header(std::ostream& out) {
  out << "t,y,gamma0,gamma1,center,lower,upper,run_lower,run_upper,rejected\n";
}

void write_report_row(std::ostream& out, const ConfSeqState& state) {
  const double g0 = state.stats.gamma0();
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double center = g0 > 0.0 ? state.stats.gamma1() / g0 : nan;
  const double run_lo = state.running.empty ? nan : state.running.lower;
  const double run_hi = state.running.empty ? nan : state.running.upper;
  out << state.stats.count() << ',' << format_double(state.stats.last()) << ','
      << format_double(g0) << ',' << format_double(state.stats.gamma1()) << ','
      << format_double(center) << ',' << format_double(state.current.lower)
      << ',' << format_double(state.current.upper) << ','
      << format_double(run_lo) << ',' << format_double(run_hi) << ','
      << (state.rejected ? "true" : "false") << '\n';
}

}  // namespace arcs
