#include "arcs/ar1.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include <doctest.h>

#include "arcs/csv.hpp"

using namespace arcs;

namespace {

// Wraps another source and keeps every draw, for replaying recursions by hand.
class RecordingSource final : public InnovationSource {
 public:
  explicit RecordingSource(InnovationSource& inner) : inner_(&inner) {}
  double next() override {
    draws.push_back(inner_->next());
    return draws.back();
  }
  std::vector<double> draws;

 private:
  InnovationSource* inner_;
};

}  // namespace

TEST_CASE("alpha=0 collapses the recursion to the raw draws") {
  const Ar1Config config{0.0, 0.0, 200, 99};
  GaussianInnovations source(config.seed);
  RecordingSource recorder(source);
  const Path path = simulate_path(config, recorder);
  REQUIRE_EQ(path.values.size(), 201u);
  CHECK_EQ(path.values[0], 0.0);
  for (std::size_t t = 1; t < path.values.size(); ++t) {
    CHECK_EQ(path.values[t], recorder.draws[t - 1]);
  }
}

TEST_CASE("zero-noise random walk stays constant") {
  ConstantInnovations zeros(0.0);
  const Path path = simulate_path({1.0, 5.0, 50, 0}, zeros);
  for (double y : path.values) CHECK_EQ(y, 5.0);
}

TEST_CASE("constant innovations draw the constant") {
  ConstantInnovations ones(1.0);
  CHECK_EQ(ones.next(), 1.0);
  CHECK_EQ(ones.next(), 1.0);
  CHECK_EQ(ones.next(), 1.0);
}

TEST_CASE("zero innovations give geometric decay") {
  ConstantInnovations zeros(0.0);
  const Path path = simulate_path({0.5, 1.0, 8, 0}, zeros);
  double expected = 1.0;
  for (double y : path.values) {
    CHECK_EQ(y, doctest::Approx(expected).epsilon(1e-15));
    expected *= 0.5;
  }
}

TEST_CASE("horizon zero is rejected") {
  CHECK_THROWS_AS(simulate_path({0.8, 0.0, 0, 1}), std::invalid_argument);
}

TEST_CASE("identical configs reproduce bit-identical paths") {
  const Ar1Config config{0.8, 0.0, 500, 123456};
  const Path a = simulate_path(config);
  const Path b = simulate_path(config);
  REQUIRE_EQ(a.values.size(), b.values.size());
  for (std::size_t t = 0; t < a.values.size(); ++t) {
    CHECK_EQ(a.values[t], b.values[t]);
  }
}

TEST_CASE("recursion matches a manual fold of the same draws") {
  const Ar1Config config{0.7, 1.5, 300, 4242};
  GaussianInnovations source(config.seed);
  RecordingSource recorder(source);
  const Path path = simulate_path(config, recorder);
  double y = config.y0;
  for (std::size_t t = 1; t < path.values.size(); ++t) {
    y = config.alpha * y + recorder.draws[t - 1];
    CHECK_EQ(path.values[t], y);
  }
}

TEST_CASE("long stationary path hits the stationary variance") {
  const double alpha = 0.8;
  const std::int64_t horizon = 100000;
  const Path path = simulate_path({alpha, 0.0, horizon, 2024});
  double mean = 0.0;
  for (double y : path.values) mean += y;
  mean /= static_cast<double>(path.values.size());
  double var = 0.0;
  for (double y : path.values) var += (y - mean) * (y - mean);
  var /= static_cast<double>(path.values.size());

  const double target = 1.0 / (1.0 - alpha * alpha);
  // Var of the sample variance for a Gaussian AR(1):
  // (2 sigma_y^4 / T) (1 + alpha^2) / (1 - alpha^2).
  const double se =
      std::sqrt(2.0 * target * target / static_cast<double>(horizon) *
                (1.0 + alpha * alpha) / (1.0 - alpha * alpha));
  CHECK_LT(std::abs(var - target), 3.0 * se);

  // Lag-1 sample autocorrelation within 3 standard errors of alpha.
  double num = 0.0;
  for (std::size_t t = 0; t + 1 < path.values.size(); ++t) {
    num += (path.values[t] - mean) * (path.values[t + 1] - mean);
  }
  num /= static_cast<double>(path.values.size());
  const double r1 = num / var;
  const double se_r1 =
      std::sqrt((1.0 - alpha * alpha) / static_cast<double>(horizon));
  CHECK_LT(std::abs(r1 - alpha), 3.0 * se_r1);
}

TEST_CASE("path csv round-trips bit-exactly") {
  const Path path = simulate_path({0.9, -0.25, 64, 777});
  std::ostringstream out;
  write_path_csv(out, path, "{\"command\":\"test\"}");
  std::istringstream in(out.str());
  const auto series = read_series_csv(in);
  REQUIRE_EQ(series.size(), path.values.size());
  for (std::size_t t = 0; t < series.size(); ++t) {
    CHECK_EQ(series[t], path.values[t]);
  }
}

TEST_CASE("series csv errors carry line numbers") {
  std::istringstream missing_header("0,1\n");
  CHECK_THROWS_WITH_AS(static_cast<void>(read_series_csv(missing_header)),
                       doctest::Contains("line 1"), std::runtime_error);
  std::istringstream bad_y("t,y\n0,0\n1,zzz\n");
  CHECK_THROWS_WITH_AS(static_cast<void>(read_series_csv(bad_y)),
                       doctest::Contains("line 3"), std::runtime_error);
  std::istringstream gap("t,y\n0,0\n2,1\n");
  CHECK_THROWS_WITH_AS(static_cast<void>(read_series_csv(gap)),
                       doctest::Contains("line 3"), std::runtime_error);
}
