#pragma once

// Shared random-case generators for property tests. Cases are built from
// simulated paths so the statistics have realistic joint magnitudes, and the
// query coefficient stays within a few mixing widths of the least-squares
// estimate so the quadrature oracle's +-12a window always captures the bump.

#include <cmath>
#include <cstdint>
#include <vector>

#include "arcs/ar1.hpp"
#include "arcs/gamma_stats.hpp"
#include "arcs/rng.hpp"

namespace arcs::testing {

inline double uniform_in(Engine& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform_open01(rng);
}

struct MixtureCase {
  GammaStats stats;
  double alpha;
  double a;
};

// Random statistics from a short simulated path plus a query point within
// 4a of the least-squares estimate (or of the path coefficient while the
// statistics are still empty). The path coefficient stays inside the
// stationary band: gamma0 then remains small enough that log-likelihood
// differences are computable well below the 1e-6 comparison tolerance,
// which any route through per-step ratios needs.
inline MixtureCase random_mixture_case(Engine& rng) {
  const double alpha_path = uniform_in(rng, -0.99, 0.99);
  const double y0 = uniform_in(rng, -2.0, 2.0);
  const auto horizon =
      static_cast<std::int64_t>(2 + std::floor(uniform_in(rng, 0.0, 300.0)));
  Ar1Config config{alpha_path, y0, horizon, rng()};
  const Path path = simulate_path(config);
  GammaStats stats(path.values[0]);
  for (std::size_t t = 1; t < path.values.size(); ++t) {
    stats.update(path.values[t]);
  }
  const double a = std::exp(uniform_in(rng, std::log(0.02), std::log(2.0)));
  const double anchor =
      stats.gamma0() > 0.0 ? stats.ls_estimate() : alpha_path;
  const double alpha = anchor + uniform_in(rng, -4.0 * a, 4.0 * a);
  return {stats, alpha, a};
}

// As above but guaranteeing gamma0 > 0 (nonzero starting value).
inline MixtureCase random_positive_gamma_case(Engine& rng) {
  MixtureCase c = random_mixture_case(rng);
  while (!(c.stats.gamma0() > 0.0)) {
    c = random_mixture_case(rng);
  }
  return c;
}

}  // namespace arcs::testing
