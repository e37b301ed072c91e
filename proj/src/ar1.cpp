#include "arcs/ar1.hpp"

#include <cmath>
#include <stdexcept>

namespace arcs {

void Ar1Config::validate() const {
  if (horizon < 1) {
    throw std::invalid_argument("Ar1Config: horizon must be >= 1");
  }
  if (!std::isfinite(alpha) || !std::isfinite(y0)) {
    throw std::invalid_argument("Ar1Config: alpha and y0 must be finite");
  }
}

Path simulate_path(const Ar1Config& config, InnovationSource& innovations) {
  config.validate();
  Path path;
  path.config = config;
  path.values.resize(static_cast<std::size_t>(config.horizon) + 1);
  path.values[0] = config.y0;
  double y = config.y0;
  for (std::int64_t t = 1; t <= config.horizon; ++t) {
    y = config.alpha * y + innovations.next();
    path.values[static_cast<std::size_t>(t)] = y;
  }
  return path;
}

Path simulate_path(const Ar1Config& config) {
  GaussianInnovations innovations(config.seed);
  return simulate_path(config, innovations);
}

}  // namespace arcs
