#include "arcs/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "arcs/normal.hpp"
#include "arcs/rng.hpp"

namespace arcs {

double tau_statistic(const GammaStats& stats, double alpha) {
  if (!std::isfinite(alpha)) {
    throw std::invalid_argument("tau_statistic: non-finite alpha");
  }
  const double g0 = stats.gamma0();
  if (g0 <= 0.0) {
    throw std::domain_error("tau_statistic: undefined while gamma0 == 0");
  }
  return (stats.gamma1() / g0 - alpha) * std::sqrt(g0);
}

Interval weak_interval_normal(const GammaStats& stats, double delta) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("weak_interval_normal: delta must lie in (0, 1)");
  }
  const double g0 = stats.gamma0();
  if (g0 <= 0.0) {
    throw std::domain_error("weak_interval_normal: undefined while gamma0 == 0");
  }
  const double center = stats.gamma1() / g0;
  const double half_width = normal_upper_quantile(delta / 2.0) / std::sqrt(g0);
  return Interval::closed(center - half_width, center + half_width);
}

double unit_root_statistic(std::span<const double> increments) {
  const std::size_t n = increments.size();
  if (n == 0) {
    throw std::invalid_argument("unit_root_statistic: no increments");
  }
  // Work with the unscaled random walk s_k = sum z_j; then
  // W(k/n) = s_k / sqrt(n) and the left-endpoint Riemann sum of W^2 is
  // sum_{k=0}^{n-1} s_k^2 / n^2.
  double s = 0.0;
  double sum_sq = 0.0;
  for (std::size_t k = 0; k + 1 <= n; ++k) {
    sum_sq += s * s;  // left endpoint: W(k/n), k = 0..n-1
    s += increments[k];
  }
  const double nd = static_cast<double>(n);
  const double denom = sum_sq / (nd * nd);
  if (denom <= 0.0) {
    throw std::domain_error("unit_root_statistic: degenerate path, zero denominator");
  }
  const double w1 = s / std::sqrt(nd);
  return 0.5 * (w1 * w1 - 1.0) / std::sqrt(denom);
}

namespace {

int resolve_threads(int threads) {
  if (threads > 0) return threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace

std::vector<double> simulate_unit_root_sample(std::int64_t grid_n,
                                              std::int64_t reps,
                                              std::uint64_t seed,
                                              int threads) {
  if (grid_n < 2 || reps < 2) {
    throw std::invalid_argument(
        "simulate_unit_root_sample: need grid_n >= 2 and reps >= 2");
  }
  std::vector<double> sample(static_cast<std::size_t>(reps));
  const int workers = std::min<int>(resolve_threads(threads),
                                    static_cast<int>(reps));
  auto run_range = [&](std::int64_t begin, std::int64_t end) {
    std::vector<double> increments(static_cast<std::size_t>(grid_n));
    for (std::int64_t i = begin; i < end; ++i) {
      Engine rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
      for (auto& z : increments) z = standard_normal(rng);
      sample[static_cast<std::size_t>(i)] = unit_root_statistic(increments);
    }
  };
  if (workers <= 1) {
    run_range(0, reps);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    const std::int64_t chunk = (reps + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      const std::int64_t begin = w * chunk;
      const std::int64_t end = std::min<std::int64_t>(begin + chunk, reps);
      if (begin >= end) break;
      pool.emplace_back([&run_range,
                         &error = errors[static_cast<std::size_t>(w)], begin,
                         end] {
        try {
          run_range(begin, end);
        } catch (...) {
          error = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (const auto& error : errors) {
      if (error) std::rethrow_exception(error);
    }
  }
  std::sort(sample.begin(), sample.end());
  return sample;
}

double empirical_quantile(std::span<const double> sorted, double p) {
  if (sorted.empty()) {
    throw std::invalid_argument("empirical_quantile: empty sample");
  }
  if (!(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument("empirical_quantile: p must lie in (0, 1)");
  }
  const auto n = static_cast<double>(sorted.size());
  auto k = static_cast<std::size_t>(std::ceil(p * n));
  k = std::clamp<std::size_t>(k, 1, sorted.size());
  return sorted[k - 1];
}

UnitRootQuantiles simulate_unit_root_quantiles(double delta,
                                               std::int64_t grid_n,
                                               std::int64_t reps,
                                               std::uint64_t seed,
                                               int threads) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument(
        "simulate_unit_root_quantiles: delta must lie in (0, 1)");
  }
  const auto sample = simulate_unit_root_sample(grid_n, reps, seed, threads);
  UnitRootQuantiles q;
  q.q_lo = empirical_quantile(sample, delta / 2.0);
  q.q_hi = empirical_quantile(sample, 1.0 - delta / 2.0);
  q.delta = delta;
  q.grid_n = grid_n;
  q.reps = reps;
  q.seed = seed;
  return q;
}

Interval weak_interval_unit_root(const GammaStats& stats,
                                 const UnitRootQuantiles& quantiles) {
  const double g0 = stats.gamma0();
  if (g0 <= 0.0) {
    throw std::domain_error(
        "weak_interval_unit_root: undefined while gamma0 == 0");
  }
  if (!(quantiles.q_lo < quantiles.q_hi)) {
    throw std::invalid_argument("weak_interval_unit_root: q_lo < q_hi required");
  }
  const double center = stats.gamma1() / g0;
  const double scale = std::sqrt(g0);
  return Interval::closed(center - quantiles.q_hi / scale,
                          center - quantiles.q_lo / scale);
}

std::string to_json(const UnitRootQuantiles& q) {
  nlohmann::json j;
  j["q_lo"] = q.q_lo;
  j["q_hi"] = q.q_hi;
  j["delta"] = q.delta;
  j["grid_n"] = q.grid_n;
  j["reps"] = q.reps;
  j["seed"] = q.seed;
  return j.dump(2) + "\n";
}

UnitRootQuantiles unit_root_quantiles_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  UnitRootQuantiles q;
  q.q_lo = j.at("q_lo").get<double>();
  q.q_hi = j.at("q_hi").get<double>();
  q.delta = j.at("delta").get<double>();
  q.grid_n = j.at("grid_n").get<std::int64_t>();
  q.reps = j.at("reps").get<std::int64_t>();
  q.seed = j.at("seed").get<std::uint64_t>();
  return q;
}

}  // namespace arcs
