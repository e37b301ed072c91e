// arcs: anytime-valid confidence sequences for the AR(1) coefficient.
//
// Subcommands: simulate, analyze, curve, table, coverage, quantiles, predict.
// Exit codes: 0 success, 1 data/runtime error, 2 usage error.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "arcs/ar1.hpp"
#include "arcs/baselines.hpp"
#include "arcs/confseq.hpp"
#include "arcs/csv.hpp"
#include "arcs/harness.hpp"
#include "arcs/normal.hpp"

namespace {

using nlohmann::json;

// Every output starts from one machine-readable line holding the command and
// all parameters, so a run can be reproduced from the file itself.
std::string provenance(const std::string& command, json params) {
  params["command"] = command;
  params["tool"] = "arcs";
  return params.dump();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw std::runtime_error("cannot open output file: " + path);
  }
  out << content;
  if (!out) {
    throw std::runtime_error("failed while writing output file: " + path);
  }
}

std::vector<double> read_series_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open input file: " + path);
  }
  return arcs::read_series_csv(in);
}

// Folds a series through the confidence sequence, appending one report row
// per observation (including the starting value).
arcs::ConfSeqState analyze_series(const std::vector<double>& series, double a,
                                  double delta, std::ostream* rows) {
  auto state = arcs::ConfSeqState::start(series.front(), arcs::MixtureParams{a},
                                         delta);
  if (rows != nullptr) arcs::write_report_row(*rows, state);
  for (std::size_t t = 1; t < series.size(); ++t) {
    state.step(series[t]);
    if (rows != nullptr) arcs::write_report_row(*rows, state);
  }
  return state;
}

arcs::UnitRootQuantiles load_or_simulate_quantiles(
    const std::string& quantiles_path, double delta, std::uint64_t base_seed,
    int threads) {
  if (!quantiles_path.empty()) {
    std::ifstream in(quantiles_path, std::ios::binary);
    if (!in) {
      throw std::runtime_error("cannot open quantiles file: " + quantiles_path);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    auto q = arcs::unit_root_quantiles_from_json(buf.str());
    if (q.delta != delta) {
      throw std::runtime_error(
          "quantiles file was generated for delta=" +
          arcs::format_double(q.delta) + ", need delta=" +
          arcs::format_double(delta));
    }
    return q;
  }
  return arcs::simulate_unit_root_quantiles(
      delta, 1000, 20000, arcs::derive_seed(base_seed, 0x756e6974726f6f74ull),
      threads);
}

json quantiles_json(const arcs::UnitRootQuantiles& q) {
  return json{{"q_lo", q.q_lo},   {"q_hi", q.q_hi}, {"delta", q.delta},
              {"grid_n", q.grid_n}, {"reps", q.reps}, {"seed", q.seed}};
}

struct TableRow {
  std::string type;
  arcs::Interval interval;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strong (anytime-valid) confidence sequences for the AR(1) "
               "coefficient, with weak baselines and a Monte Carlo harness"};
  app.require_subcommand(1);

  const CLI::Validator open_unit(
      [](std::string& s) -> std::string {
        try {
          const double v = std::stod(s);
          if (!(v > 0.0 && v < 1.0)) return std::string("must lie in (0, 1)");
        } catch (...) {
          return std::string("not a number");
        }
        return {};
      },
      "(0,1)");

  // Shared knobs; each subcommand registers the ones it uses.
  double alpha = 0.8;
  double y0 = 0.0;
  std::int64_t horizon = 1000;
  double a = 0.1;
  double delta = 0.01;
  double delta_pred = 0.05;
  std::uint64_t seed = 1;
  std::int64_t reps = 500;
  std::int64_t grid_n = 1000;
  double grid_lo = 0.0;
  double grid_hi = 0.0;
  double grid_step = 0.01;
  int threads = 0;
  std::string input_path;
  std::string output_path;
  std::string weak_choice = "auto";
  std::string quantiles_path;

  auto add_alpha = [&](CLI::App* cmd) {
    cmd->add_option("--alpha", alpha, "autoregressive coefficient");
  };
  auto add_y0 = [&](CLI::App* cmd) {
    cmd->add_option("--y0", y0, "starting value y_0");
  };
  auto add_horizon = [&](CLI::App* cmd) {
    cmd->add_option("--t", horizon, "number of steps T")
        ->check(CLI::PositiveNumber);
  };
  auto add_a = [&](CLI::App* cmd) {
    cmd->add_option("--a", a, "mixing standard deviation")
        ->check(CLI::PositiveNumber);
  };
  auto add_delta = [&](CLI::App* cmd) {
    cmd->add_option("--delta", delta, "miscoverage budget")->check(open_unit);
  };
  auto add_seed = [&](CLI::App* cmd) {
    cmd->add_option("--seed", seed, "base seed");
  };
  auto add_reps = [&](CLI::App* cmd) {
    cmd->add_option("--reps", reps, "Monte Carlo replications")
        ->check(CLI::PositiveNumber);
  };
  auto add_threads = [&](CLI::App* cmd) {
    cmd->add_option("--threads", threads, "worker threads (0 = all)");
  };
  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("--output", output_path, "output file (default stdout)");
  };
  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("--input", input_path, "input t,y CSV")->required();
  };

  auto* cmd_simulate =
      app.add_subcommand("simulate", "simulate one path, write t,y CSV");
  add_alpha(cmd_simulate);
  add_y0(cmd_simulate);
  add_horizon(cmd_simulate);
  add_seed(cmd_simulate);
  add_output(cmd_simulate);

  auto* cmd_analyze = app.add_subcommand(
      "analyze", "run the confidence sequence over a t,y CSV");
  add_input(cmd_analyze);
  add_a(cmd_analyze);
  add_delta(cmd_analyze);
  add_output(cmd_analyze);

  auto* cmd_curve = app.add_subcommand(
      "curve", "final log-martingale over an alpha grid, write alpha,log_s CSV");
  add_alpha(cmd_curve);
  add_y0(cmd_curve);
  add_horizon(cmd_curve);
  add_a(cmd_curve);
  add_seed(cmd_curve);
  add_output(cmd_curve);
  auto* opt_grid_lo =
      cmd_curve->add_option("--grid-lo", grid_lo, "grid lower end");
  auto* opt_grid_hi =
      cmd_curve->add_option("--grid-hi", grid_hi, "grid upper end");
  cmd_curve->add_option("--grid-step", grid_step, "grid step")
      ->check(CLI::PositiveNumber);

  auto* cmd_table = app.add_subcommand(
      "table", "strong and weak intervals at step T; Monte Carlo aggregates "
               "when --reps > 1");
  add_alpha(cmd_table);
  add_y0(cmd_table);
  add_horizon(cmd_table);
  add_a(cmd_table);
  add_delta(cmd_table);
  add_seed(cmd_table);
  add_reps(cmd_table);
  add_threads(cmd_table);
  add_output(cmd_table);
  cmd_table->add_option("--weak", weak_choice, "weak baseline")
      ->check(CLI::IsMember({"auto", "normal", "unit-root"}));
  cmd_table->add_option("--quantiles", quantiles_path,
                        "unit-root quantiles JSON (from `quantiles`)");

  auto* cmd_coverage = app.add_subcommand(
      "coverage", "Monte Carlo coverage of the running intersection, JSON");
  add_alpha(cmd_coverage);
  add_y0(cmd_coverage);
  add_horizon(cmd_coverage);
  add_a(cmd_coverage);
  add_delta(cmd_coverage);
  add_seed(cmd_coverage);
  add_reps(cmd_coverage);
  add_threads(cmd_coverage);
  add_output(cmd_coverage);

  auto* cmd_quantiles = app.add_subcommand(
      "quantiles", "simulate unit-root limit-law quantiles, JSON");
  add_delta(cmd_quantiles);
  add_seed(cmd_quantiles);
  add_threads(cmd_quantiles);
  add_output(cmd_quantiles);
  cmd_quantiles->add_option("--grid", grid_n, "Brownian grid steps")
      ->check(CLI::Range(static_cast<std::int64_t>(2),
                         std::numeric_limits<std::int64_t>::max()));
  cmd_quantiles->add_option("--reps", reps, "Monte Carlo replications")
      ->check(CLI::Range(static_cast<std::int64_t>(2),
                         std::numeric_limits<std::int64_t>::max()));

  auto* cmd_predict = app.add_subcommand(
      "predict", "next-step prediction interval from the running intersection");
  add_input(cmd_predict);
  add_a(cmd_predict);
  add_delta(cmd_predict);
  add_output(cmd_predict);
  cmd_predict->add_option("--delta-pred", delta_pred,
                          "per-step prediction budget")
      ->check(open_unit);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(cmd_simulate)) {
      const arcs::Ar1Config config{alpha, y0, horizon, seed};
      const arcs::Path path = arcs::simulate_path(config);
      std::ostringstream out;
      arcs::write_path_csv(out, path,
                           provenance("simulate", {{"alpha", alpha},
                                                   {"y0", y0},
                                                   {"t", horizon},
                                                   {"seed", seed}}));
      write_output(output_path, out.str());
    } else if (app.got_subcommand(cmd_analyze)) {
      const auto series = read_series_file(input_path);
      std::ostringstream out;
      out << "# "
          << provenance("analyze", {{"input", input_path},
                                    {"a", a},
                                    {"delta", delta}})
          << '\n';
      arcs::write_report_header(out);
      analyze_series(series, a, delta, &out);
      write_output(output_path, out.str());
    } else if (app.got_subcommand(cmd_curve)) {
      arcs::ExperimentConfig config;
      config.alpha_true = alpha;
      config.y0 = y0;
      config.horizon = horizon;
      config.a = a;
      config.base_seed = seed;
      config.alpha_grid.lo = opt_grid_lo->count() > 0 ? grid_lo : alpha - 0.3;
      config.alpha_grid.hi = opt_grid_hi->count() > 0 ? grid_hi : alpha + 0.3;
      config.alpha_grid.step = grid_step;
      const auto curve = arcs::run_figure_curve(config);
      std::ostringstream out;
      arcs::write_curve_csv(
          out, curve,
          provenance("curve", {{"alpha", alpha},
                               {"y0", y0},
                               {"t", horizon},
                               {"a", a},
                               {"seed", seed},
                               {"grid_lo", config.alpha_grid.lo},
                               {"grid_hi", config.alpha_grid.hi},
                               {"grid_step", config.alpha_grid.step}}));
      write_output(output_path, out.str());
    } else if (app.got_subcommand(cmd_table)) {
      const bool unit_root =
          weak_choice == "unit-root" ||
          (weak_choice == "auto" && alpha == 1.0);
      std::optional<arcs::UnitRootQuantiles> quantiles;
      if (unit_root) {
        quantiles =
            load_or_simulate_quantiles(quantiles_path, delta, seed, threads);
      }
      json prov{{"alpha", alpha}, {"y0", y0},     {"t", horizon},
                {"a", a},         {"delta", delta}, {"seed", seed},
                {"reps", reps},
                {"weak", unit_root ? "unit-root" : "normal"}};
      if (quantiles) prov["quantiles"] = quantiles_json(*quantiles);
      std::ostringstream out;
      out << "# " << provenance("table", prov) << '\n';
      const std::string weak_label =
          unit_root ? "weak_approx_unit_root" : "weak_approx_normal";
      if (reps == 1) {
        // Single-path mode: realized intervals, one row per type, matching
        // replication 0 of the Monte Carlo mode.
        arcs::GaussianInnovations innovations(arcs::derive_seed(seed, 0));
        auto state =
            arcs::ConfSeqState::start(y0, arcs::MixtureParams{a}, delta);
        for (std::int64_t t = 1; t <= horizon; ++t) {
          state.step(alpha * state.stats.last() + innovations.next());
        }
        const arcs::Interval weak =
            unit_root ? arcs::weak_interval_unit_root(state.stats, *quantiles)
                      : arcs::weak_interval_normal(state.stats, delta);
        out << "interval_type,lower,upper,width\n";
        for (const TableRow& row :
             {TableRow{"strong", state.current}, TableRow{weak_label, weak}}) {
          out << row.type << ',' << arcs::format_double(row.interval.lower)
              << ',' << arcs::format_double(row.interval.upper) << ','
              << arcs::format_double(row.interval.width()) << '\n';
        }
      } else {
        arcs::ExperimentConfig config;
        config.alpha_true = alpha;
        config.y0 = y0;
        config.horizon = horizon;
        config.a = a;
        config.delta = delta;
        config.replications = reps;
        config.base_seed = seed;
        config.weak =
            unit_root ? arcs::WeakKind::unit_root : arcs::WeakKind::normal;
        config.threads = threads;
        const auto report = arcs::run_table_experiment(
            config, quantiles ? &*quantiles : nullptr);
        out << "interval_type,mean_width,median_width,coverage_freq,"
               "replications\n";
        out << "strong," << arcs::format_double(report.mean_strong_width)
            << ',' << arcs::format_double(report.median_strong_width) << ','
            << arcs::format_double(report.coverage_freq) << ','
            << report.replications << '\n';
        out << weak_label << ',' << arcs::format_double(report.mean_weak_width)
            << ',' << arcs::format_double(report.median_weak_width) << ",,"
            << report.replications << '\n';
      }
      write_output(output_path, out.str());
    } else if (app.got_subcommand(cmd_coverage)) {
      arcs::ExperimentConfig config;
      config.alpha_true = alpha;
      config.y0 = y0;
      config.horizon = horizon;
      config.a = a;
      config.delta = delta;
      config.replications = reps;
      config.base_seed = seed;
      config.threads = threads;
      const auto report = arcs::run_coverage_experiment(config);
      write_output(output_path, arcs::to_json(report));
    } else if (app.got_subcommand(cmd_quantiles)) {
      const auto q =
          arcs::simulate_unit_root_quantiles(delta, grid_n, reps, seed, threads);
      write_output(output_path, arcs::to_json(q));
    } else if (app.got_subcommand(cmd_predict)) {
      const auto series = read_series_file(input_path);
      const auto state = analyze_series(series, a, delta, nullptr);
      const arcs::Interval pred =
          arcs::prediction_interval(state.running, state.stats.last(),
                                    delta_pred);
      json j;
      j["provenance"] = json{{"command", "predict"},
                             {"tool", "arcs"},
                             {"input", input_path},
                             {"a", a},
                             {"delta", delta},
                             {"delta_pred", delta_pred}};
      j["t"] = state.stats.count();
      j["y_last"] = state.stats.last();
      j["z"] = arcs::normal_upper_quantile(delta_pred / 2.0);
      j["running"] = {{"lower", state.running.lower},
                      {"upper", state.running.upper}};
      j["prediction"] = {{"lower", pred.lower}, {"upper", pred.upper}};
      write_output(output_path, j.dump(2) + "\n");
    }
  } catch (const std::invalid_argument& e) {
    // Invalid parameter combinations that the flag parser cannot express
    // (grid bounds, non-finite values) are still usage errors.
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
