#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "arcs/gamma_stats.hpp"
#include "arcs/interval.hpp"

namespace arcs {

// The pivot (gamma1/gamma0 - alpha) * sqrt(gamma0): asymptotically N(0,1)
// in the stationary case |alpha| < 1, and distributed as the Brownian
// functional below at the unit root.
double tau_statistic(const GammaStats& stats, double alpha);

// Fixed-T central interval from the normal approximation of the pivot:
// center gamma1/gamma0, half-width z_{delta/2} / sqrt(gamma0) with z_{delta/2}
// the upper delta/2 standard-normal quantile. Approximate and per-time only;
// no anytime guarantee.
Interval weak_interval_normal(const GammaStats& stats, double delta);

// Monte Carlo quantiles of the unit-root limit law
//
//   (1/2) (W(1)^2 - 1) / sqrt(int_0^1 W(s)^2 ds),   W standard Brownian motion,
//
// with all generation parameters kept alongside the estimates.
struct UnitRootQuantiles {
  double q_lo = 0.0;  // lower delta/2 empirical quantile
  double q_hi = 0.0;  // upper delta/2 empirical quantile
  double delta = 0.0;
  std::int64_t grid_n = 0;
  std::int64_t reps = 0;
  std::uint64_t seed = 0;
};

// Statistic of one Brownian path discretized to `increments.size()` steps of
// N(0,1) increments: (1/2)(W(1)^2 - 1)/sqrt(sum W(s)^2 ds) with a
// left-endpoint Riemann sum. Throws std::domain_error when the denominator
// vanishes (possible only for degenerate inputs).
double unit_root_statistic(std::span<const double> increments);

// `reps` independent draws of the discretized statistic, sorted ascending.
// Replication i uses the generator seeded with derive_seed(seed, i), so the
// result is independent of the thread count (threads == 0 means hardware).
std::vector<double> simulate_unit_root_sample(std::int64_t grid_n,
                                              std::int64_t reps,
                                              std::uint64_t seed,
                                              int threads = 0);

// Order statistic x_(k) with k = ceil(p * n) over a sorted sample.
double empirical_quantile(std::span<const double> sorted, double p);

UnitRootQuantiles simulate_unit_root_quantiles(double delta,
                                               std::int64_t grid_n,
                                               std::int64_t reps,
                                               std::uint64_t seed,
                                               int threads = 0);

// Inverts q_lo <= (gamma1/gamma0 - alpha) sqrt(gamma0) <= q_hi:
//
//   [gamma1/gamma0 - q_hi/sqrt(gamma0), gamma1/gamma0 - q_lo/sqrt(gamma0)]
//
// Asymmetric around the least-squares estimate; approximate, per-time only.
Interval weak_interval_unit_root(const GammaStats& stats,
                                 const UnitRootQuantiles& quantiles);

std::string to_json(const UnitRootQuantiles& quantiles);
UnitRootQuantiles unit_root_quantiles_from_json(const std::string& text);

}  // namespace arcs
