#include "arcs/harness.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "arcs/ar1.hpp"
#include "arcs/compensated_sum.hpp"

namespace arcs {

std::vector<double> GridSpec::points() const {
  if (!(step > 0.0) || !std::isfinite(lo) || !std::isfinite(hi) || hi <= lo) {
    throw std::invalid_argument("GridSpec: need finite lo < hi and step > 0");
  }
  const auto n = static_cast<std::int64_t>(
                     std::floor((hi - lo) / step + 1e-9)) + 1;
  if (n < 2) {
    throw std::invalid_argument("GridSpec: grid must contain at least 2 points");
  }
  std::vector<double> pts(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) {
    pts[static_cast<std::size_t>(i)] = lo + step * static_cast<double>(i);
  }
  return pts;
}

void ExperimentConfig::validate() const {
  Ar1Config{alpha_true, y0, horizon, base_seed}.validate();
  MixtureParams{a}.validate();
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("ExperimentConfig: delta must lie in (0, 1)");
  }
  if (replications < 1) {
    throw std::invalid_argument("ExperimentConfig: replications must be >= 1");
  }
}

namespace {

int resolve_threads(int threads) {
  if (threads > 0) return threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs fn(i) for i in [0, n) across workers. Each index must touch only its
// own output slots, which keeps results independent of the partitioning.
// The first worker exception is rethrown on the calling thread.
void parallel_for(std::int64_t n, int threads,
                  const std::function<void(std::int64_t)>& fn) {
  const int workers = std::min<int>(resolve_threads(threads),
                                    static_cast<int>(std::max<std::int64_t>(n, 1)));
  if (workers <= 1) {
    for (std::int64_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  const std::int64_t chunk = (n + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const std::int64_t begin = w * chunk;
    const std::int64_t end = std::min<std::int64_t>(begin + chunk, n);
    if (begin >= end) break;
    pool.emplace_back([&fn, &error = errors[static_cast<std::size_t>(w)],
                       begin, end] {
      try {
        for (std::int64_t i = begin; i < end; ++i) fn(i);
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

double median_of(std::vector<double> v) {
  const std::size_t n = v.size();
  std::sort(v.begin(), v.end());
  if (n % 2 == 1) return v[n / 2];
  return 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

double mean_of(const std::vector<double>& v) {
  CompensatedSum sum;
  for (double x : v) sum.add(x);
  return sum.value() / static_cast<double>(v.size());
}

}  // namespace

CoverageReport run_table_experiment(const ExperimentConfig& config,
                                    const UnitRootQuantiles* unit_root) {
  config.validate();

  UnitRootQuantiles simulated;
  if (config.weak == WeakKind::unit_root && unit_root == nullptr) {
    simulated = simulate_unit_root_quantiles(
        config.delta, 1000, 20000,
        derive_seed(config.base_seed, 0x756e6974726f6f74ull),  // its own stream
        config.threads);
    unit_root = &simulated;
  }

  const auto reps = static_cast<std::size_t>(config.replications);
  std::vector<double> strong_widths(reps);
  std::vector<double> weak_widths(reps);
  std::vector<double> martingale_values(reps);
  std::vector<char> covered(reps, 0);

  const MixtureParams params{config.a};
  parallel_for(config.replications, config.threads, [&](std::int64_t i) {
    GaussianInnovations innovations(
        derive_seed(config.base_seed, static_cast<std::uint64_t>(i)));
    auto state = ConfSeqState::start(config.y0, params, config.delta);
    for (std::int64_t t = 1; t <= config.horizon; ++t) {
      state.step(config.alpha_true * state.stats.last() + innovations.next());
    }
    const auto idx = static_cast<std::size_t>(i);
    covered[idx] = state.running.contains(config.alpha_true) ? 1 : 0;
    strong_widths[idx] = state.current.width();
    weak_widths[idx] =
        config.weak == WeakKind::unit_root
            ? weak_interval_unit_root(state.stats, *unit_root).width()
            : weak_interval_normal(state.stats, config.delta).width();
    martingale_values[idx] =
        std::exp(log_mixture(config.alpha_true, params, state.stats));
  });

  CoverageReport report;
  report.config = config;
  report.replications = config.replications;
  std::int64_t covered_count = 0;
  for (char c : covered) covered_count += c;
  report.coverage_freq =
      static_cast<double>(covered_count) / static_cast<double>(reps);
  report.mean_strong_width = mean_of(strong_widths);
  report.median_strong_width = median_of(strong_widths);
  report.mean_weak_width = mean_of(weak_widths);
  report.median_weak_width = median_of(weak_widths);
  report.martingale_mean_at_T = mean_of(martingale_values);
  CompensatedSum sq_dev;
  for (double s : martingale_values) {
    const double d = s - report.martingale_mean_at_T;
    sq_dev.add(d * d);
  }
  const auto n = static_cast<double>(reps);
  report.martingale_mean_se =
      reps > 1 ? std::sqrt(sq_dev.value() / (n - 1.0) / n) : 0.0;
  return report;
}

CoverageReport run_coverage_experiment(const ExperimentConfig& config) {
  return run_table_experiment(config);
}

std::vector<std::pair<double, double>> run_figure_curve(
    const ExperimentConfig& config) {
  config.validate();
  const Ar1Config path_config{config.alpha_true, config.y0, config.horizon,
                              config.base_seed};
  const Path path = simulate_path(path_config);
  const auto grid = config.alpha_grid.points();
  return martingale_curve(path, MixtureParams{config.a}, grid);
}

namespace {

nlohmann::json config_json(const ExperimentConfig& c) {
  nlohmann::json j;
  j["alpha_true"] = c.alpha_true;
  j["y0"] = c.y0;
  j["horizon"] = c.horizon;
  j["a"] = c.a;
  j["delta"] = c.delta;
  j["replications"] = c.replications;
  j["base_seed"] = c.base_seed;
  j["alpha_grid"] = {{"lo", c.alpha_grid.lo},
                     {"hi", c.alpha_grid.hi},
                     {"step", c.alpha_grid.step}};
  j["weak"] = c.weak == WeakKind::unit_root ? "unit_root" : "normal";
  return j;
}

}  // namespace

std::string to_json(const CoverageReport& r) {
  nlohmann::json j;
  j["coverage_freq"] = r.coverage_freq;
  j["mean_strong_width"] = r.mean_strong_width;
  j["median_strong_width"] = r.median_strong_width;
  j["mean_weak_width"] = r.mean_weak_width;
  j["median_weak_width"] = r.median_weak_width;
  j["martingale_mean_at_T"] = r.martingale_mean_at_T;
  j["martingale_mean_se"] = r.martingale_mean_se;
  j["replications"] = r.replications;
  j["weak_interval_type"] = r.config.weak == WeakKind::unit_root
                                ? "approximate_unit_root"
                                : "approximate_normal";
  j["config"] = config_json(r.config);
  return j.dump(2) + "\n";
}

}  // namespace arcs
