#include "arcs/martingale.hpp"

#include <cmath>
#include <stdexcept>

namespace arcs {

void MixtureParams::validate() const {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw std::invalid_argument("MixtureParams: a must be positive and finite");
  }
}

double log_lr(double alpha, double alpha_true, const GammaStats& stats) {
  if (!std::isfinite(alpha) || !std::isfinite(alpha_true)) {
    throw std::invalid_argument("log_lr: non-finite coefficient");
  }
  const double g0 = stats.gamma0();
  const double g1 = stats.gamma1();
  return ((alpha * alpha - alpha_true * alpha_true) * g0 +
          2.0 * (alpha_true - alpha) * g1) /
         2.0;
}

double log_mixture(double alpha, const MixtureParams& params,
                   const GammaStats& stats) {
  params.validate();
  if (!std::isfinite(alpha)) {
    throw std::invalid_argument("log_mixture: non-finite coefficient");
  }
  const double a = params.a;
  const double g0 = stats.gamma0();
  const double g1 = stats.gamma1();
  const double a2g0 = a * a * g0;
  const double scaled = a * (g1 - alpha * g0);
  return -0.5 * std::log1p(a2g0) + scaled * scaled / (2.0 * (a2g0 + 1.0));
}

std::vector<std::pair<double, double>> martingale_curve(
    const Path& path, const MixtureParams& params,
    std::span<const double> alpha_grid) {
  params.validate();
  if (alpha_grid.empty()) {
    throw std::invalid_argument("martingale_curve: empty alpha grid");
  }
  GammaStats stats(path.values.at(0));
  for (std::size_t t = 1; t < path.values.size(); ++t) {
    stats.update(path.values[t]);
  }
  std::vector<std::pair<double, double>> curve;
  curve.reserve(alpha_grid.size());
  for (double alpha : alpha_grid) {
    curve.emplace_back(alpha, log_mixture(alpha, params, stats));
  }
  return curve;
}

}  // namespace arcs
