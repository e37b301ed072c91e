#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "arcs/baselines.hpp"
#include "arcs/confseq.hpp"

namespace arcs {

// Uniform alpha grid [lo, hi] with the given step, endpoints included.
struct GridSpec {
  double lo = 0.5;
  double hi = 1.1;
  double step = 0.01;

  std::vector<double> points() const;  // throws unless it yields >= 2 points
};

enum class WeakKind { normal, unit_root };

struct ExperimentConfig {
  double alpha_true = 0.8;
  double y0 = 0.0;
  std::int64_t horizon = 1000;
  double a = 0.1;
  double delta = 0.01;
  std::int64_t replications = 500;
  std::uint64_t base_seed = 1;
  GridSpec alpha_grid;
  WeakKind weak = WeakKind::normal;
  int threads = 0;  // 0 = all hardware threads; never affects the numbers

  void validate() const;
};

// Monte Carlo summary over independent replications. Coverage is the
// fraction of replications in which alpha_true stayed inside the running
// intersection through every step (a rejected replication therefore counts
// as a coverage failure). Widths are those of the step-T interval; medians
// are reported because gamma0 is heavy-tailed at the unit root.
struct CoverageReport {
  double coverage_freq = 0.0;
  double mean_strong_width = 0.0;
  double median_strong_width = 0.0;
  double mean_weak_width = 0.0;
  double median_weak_width = 0.0;
  double martingale_mean_at_T = 0.0;  // sample mean of S_T at alpha_true
  double martingale_mean_se = 0.0;    // sample standard error of that mean
  std::int64_t replications = 0;
  ExperimentConfig config;
};

// Runs `replications` independent paths (replication i seeded with
// derive_seed(base_seed, i)), each folded through the full confidence
// sequence, with the weak baseline evaluated at the final step. When the
// weak kind is unit_root and no precomputed quantiles are supplied, they are
// simulated once with defaults (grid_n 1000, 20000 reps, seed derived from
// base_seed) before the replication loop.
CoverageReport run_table_experiment(const ExperimentConfig& config,
                                    const UnitRootQuantiles* unit_root = nullptr);

// Same replication machinery, reported with the coverage fields in focus.
CoverageReport run_coverage_experiment(const ExperimentConfig& config);

// (alpha, log S_T^alpha) over config.alpha_grid for one path seeded directly
// with base_seed (so it matches a path simulated with the same seed).
std::vector<std::pair<double, double>> run_figure_curve(
    const ExperimentConfig& config);

std::string to_json(const CoverageReport& report);

}  // namespace arcs
