#pragma once

#include <span>
#include <utility>
#include <vector>

#include "arcs/ar1.hpp"
#include "arcs/gamma_stats.hpp"

namespace arcs {

// Standard deviation of the N(alpha, a^2) mixing distribution placed over the
// unknown true coefficient when forming the mixture martingale.
struct MixtureParams {
  double a = 0.1;

  void validate() const;  // throws std::invalid_argument unless 0 < a < inf
};

// Log likelihood ratio of the sample under coefficient alpha_true against
// coefficient alpha, as a function of the sufficient statistics:
//
//   ((alpha^2 - alpha_true^2) gamma0 + 2 (alpha_true - alpha) gamma1) / 2.
//
// This is a nonnegative martingale starting from 1 under alpha (in log
// space: starting from 0).
double log_lr(double alpha, double alpha_true, const GammaStats& stats);

// Log of the mixture martingale, the integral of the likelihood ratio over
// alpha_true ~ N(alpha, a^2), which evaluates in closed form to
//
//   -(1/2) log(a^2 g0 + 1) + a^2 (g1 - alpha g0)^2 / (2 (a^2 g0 + 1)).
//
// All martingale values are carried in log space; exponentiate only at
// reporting boundaries (std::exp saturates to +inf on overflow).
double log_mixture(double alpha, const MixtureParams& params,
                   const GammaStats& stats);

// log_mixture over an alpha grid, at the statistics accumulated over the
// whole path. The curve is a convex quadratic in alpha (over a positive
// affine denominator), minimized at the least-squares estimate.
std::vector<std::pair<double, double>> martingale_curve(
    const Path& path, const MixtureParams& params,
    std::span<const double> alpha_grid);

}  // namespace arcs
