#pragma once

#include <cstdint>
#include <vector>

#include "arcs/rng.hpp"

namespace arcs {

// Parameters of the autoregression y_t = alpha * y_{t-1} + eps_t with unit
// innovation variance and a fixed starting value.
struct Ar1Config {
  double alpha = 0.8;
  double y0 = 0.0;
  std::int64_t horizon = 1000;  // number of steps T; the path has T+1 values
  std::uint64_t seed = 0;

  void validate() const;  // throws std::invalid_argument
};

// Stream of i.i.d. innovation draws. Inference always assumes N(0,1)
// innovations; alternative sources exist for simulation and testing only.
class InnovationSource {
 public:
  virtual ~InnovationSource() = default;
  virtual double next() = 0;
};

// N(0,1) innovations from a seeded engine (inverse-CDF sampler, see rng.hpp).
class GaussianInnovations final : public InnovationSource {
 public:
  explicit GaussianInnovations(std::uint64_t seed) : rng_(seed) {}
  double next() override { return standard_normal(rng_); }

 private:
  Engine rng_;
};

// Degenerate source whose every draw equals a fixed constant. Testing aid.
class ConstantInnovations final : public InnovationSource {
 public:
  explicit ConstantInnovations(double constant) : constant_(constant) {}
  double next() override { return constant_; }

 private:
  double constant_;
};

// A realized trajectory y_0 .. y_T with its generating configuration.
// Immutable after construction and safe to share across threads.
struct Path {
  std::vector<double> values;
  Ar1Config config;
};

// Runs the recursion y_t = alpha * y_{t-1} + eps_t for t = 1..horizon,
// consuming one draw per step.
Path simulate_path(const Ar1Config& config, InnovationSource& innovations);

// Same, with Gaussian innovations seeded from config.seed.
Path simulate_path(const Ar1Config& config);

}  // namespace arcs
