// Copyright 2026 The pneusim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pneusim/config.hpp"
#include "pneusim/csv.hpp"
#include "pneusim/harness.hpp"

namespace {

using namespace pneusim;

constexpr TunerMode kAllModes[] = {TunerMode::kPid, TunerMode::kFfStatic,
                                   TunerMode::kFfAdaptive,
                                   TunerMode::kFbAdaptive, TunerMode::kTwoDof};

std::string join_path(const std::string& dir, const std::string& name) {
  return (std::filesystem::path(dir) / name).string();
}

void ensure_out_dir(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    throw std::runtime_error("cannot create output directory: " + dir);
  }
}

void print_metrics_table(const std::vector<ComparisonRow>& rows) {
  // Table-style summary; '*' marks the best value in each column
  // (e_max, |e|_ave, RMSE, Var: smallest; e_min: closest to zero).
  const char* cols[] = {"e_max[deg]", "e_min[deg]", "|e|_ave[%]",
                        "RMSE[deg]", "Var[deg2]"};
  auto value = [](const MetricsReport& m, int c) {
    switch (c) {
      case 0: return m.e_max_deg;
      case 1: return m.e_min_deg;
      case 2: return m.abs_e_ave_pct;
      case 3: return m.rmse_deg;
      default: return m.var_deg2;
    }
  };
  std::size_t best[5] = {0, 0, 0, 0, 0};
  for (int c = 0; c < 5; ++c) {
    for (std::size_t i = 1; i < rows.size(); ++i) {
      const double a = value(rows[i].metrics, c);
      const double b = value(rows[best[c]].metrics, c);
      const bool better = c == 1 ? std::fabs(a) < std::fabs(b) : a < b;
      if (better) best[c] = i;
    }
  }
  std::printf("%-12s", "method");
  for (const char* col : cols) std::printf(" %13s", col);
  std::printf("\n");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::printf("%-12s", tuner_mode_name(rows[i].mode));
    for (int c = 0; c < 5; ++c) {
      std::string cell = format_value(value(rows[i].metrics, c));
      if (rows.size() > 1 && best[c] == i) cell += "*";
      std::printf(" %13s", cell.c_str());
    }
    std::printf("\n");
  }
}

int cmd_track(const RunConfig& cfg) {
  ensure_out_dir(cfg.out_dir);
  const EpisodeTrace trace = run_episode(cfg);
  const MetricsReport metrics = compute_metrics(trace);
  const std::string mode = tuner_mode_name(cfg.tuner.mode);
  const std::string trace_path = join_path(cfg.out_dir, "trace_" + mode + ".csv");
  write_trace(trace, trace_path);
  std::vector<ComparisonRow> rows = {{cfg.tuner.mode, metrics}};
  write_metrics(rows, join_path(cfg.out_dir, "metrics.csv"));
  print_metrics_table(rows);
  std::printf("trace: %s\n", trace_path.c_str());
  return 0;
}

int cmd_compare(const RunConfig& cfg) {
  ensure_out_dir(cfg.out_dir);
  // One episode per mode, identical seeds, run concurrently; traces are
  // emitted per mode and the metrics derive from those same traces.
  std::vector<std::future<EpisodeTrace>> futures;
  for (TunerMode mode : kAllModes) {
    RunConfig c = cfg;
    c.tuner.mode = mode;
    futures.push_back(
        std::async(std::launch::async, [c]() { return run_episode(c); }));
  }
  std::vector<ComparisonRow> rows;
  for (std::size_t i = 0; i < std::size(kAllModes); ++i) {
    const EpisodeTrace trace = futures[i].get();
    write_trace(trace, join_path(cfg.out_dir,
                                 std::string("trace_") +
                                     tuner_mode_name(kAllModes[i]) + ".csv"));
    rows.push_back({kAllModes[i], compute_metrics(trace)});
  }
  write_metrics(rows, join_path(cfg.out_dir, "metrics.csv"));
  print_metrics_table(rows);
  return 0;
}

int cmd_identify(RunConfig cfg) {
  ensure_out_dir(cfg.out_dir);
  if (cfg.reference.kind != ReferenceKind::kTriangularPressure) {
    // Convenience: a bending config still identifies with the canonical
    // triangle spanning most of the pressure range.
    cfg.reference = ReferenceSpec::triangular(0.8 * cfg.plant.p_max_kpa, 40.0);
  }
  const HysteresisLoop loop = identify_hysteresis(cfg);
  write_loop(loop, join_path(cfg.out_dir, "identify_loop.csv"));
  std::printf("loop_area_deg_kpa: %s\n", format_value(loop.loop_area_deg_kpa).c_str());
  std::printf("upper_deadzone_kpa: %s\n", format_value(loop.upper_deadzone_kpa).c_str());
  std::printf("lower_deadzone_kpa: %s\n", format_value(loop.lower_deadzone_kpa).c_str());
  std::printf("deadzone_ratio: %s\n",
              format_value(loop.upper_deadzone_kpa /
                           (loop.lower_deadzone_kpa > 0.0
                                ? loop.lower_deadzone_kpa
                                : 1.0)).c_str());
  return 0;
}

int cmd_sweep(const RunConfig& base, const std::string& param,
              const std::vector<std::string>& values) {
  ensure_out_dir(base.out_dir);
  std::ofstream out(join_path(base.out_dir, "sweep.csv"), std::ios::binary);
  if (!out) throw std::runtime_error("cannot open sweep.csv for writing");
  out << "param,value," << &kMetricsHeader[7] << "\n";  // strip "method,"
  std::printf("%-24s %13s %13s %13s %13s %13s\n", (param + "=").c_str(),
              "e_max[deg]", "e_min[deg]", "|e|_ave[%]", "RMSE[deg]",
              "Var[deg2]");
  for (const std::string& v : values) {
    RunConfig cfg = base;
    apply_key(cfg, param, v);
    cfg.validate();
    const MetricsReport m = compute_metrics(run_episode(cfg));
    out << param << ',' << v << ',' << format_value(m.e_max_deg) << ','
        << format_value(m.e_min_deg) << ',' << format_value(m.abs_e_ave_pct)
        << ',' << format_value(m.rmse_deg) << ',' << format_value(m.var_deg2)
        << '\n';
    std::printf("%-24s %13s %13s %13s %13s %13s\n", v.c_str(),
                format_value(m.e_max_deg).c_str(),
                format_value(m.e_min_deg).c_str(),
                format_value(m.abs_e_ave_pct).c_str(),
                format_value(m.rmse_deg).c_str(),
                format_value(m.var_deg2).c_str());
  }
  if (!out) throw std::runtime_error("write failed: sweep.csv");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hysteresis-aware cascade control testbed for a pneumatic "
               "bending actuator"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::string out_dir;
  std::uint64_t seed = 0;
  bool seed_set = false;
  app.add_option("--config", config_path, "Config file (see README grammar)");
  app.add_option("--out", out_dir, "Output directory for CSV files");
  auto* seed_opt = app.add_option("--seed", seed, "Override the config seed");

  std::string mode_name = "two_dof";
  auto* track = app.add_subcommand("track", "Run one tracking episode");
  track->add_option("--mode", mode_name,
                    "pid|ff_static|ff_adaptive|fb_adaptive|two_dof");

  app.add_subcommand("compare", "Run all five controller modes and rank them");
  app.add_subcommand("identify",
                     "Run the triangular-waveform hysteresis identification");
  auto* sweep = app.add_subcommand("sweep", "Sweep one config key");
  std::string sweep_param;
  std::vector<std::string> sweep_values;
  sweep->add_option("--param", sweep_param, "Config key, e.g. tuner.mu")
      ->required();
  sweep->add_option("--values", sweep_values, "Comma-separated values")
      ->required()
      ->delimiter(',');
  app.add_subcommand("dump-config", "Print the full effective config");

  CLI11_PARSE(app, argc, argv);
  seed_set = seed_opt->count() > 0;

  try {
    RunConfig cfg =
        config_path.empty() ? RunConfig::defaults() : load_config(config_path);
    if (seed_set) cfg.seed = seed;
    if (!out_dir.empty()) cfg.out_dir = out_dir;
    cfg.validate();

    if (app.got_subcommand("track")) {
      TunerMode mode;
      if (!tuner_mode_from_name(mode_name.c_str(), &mode)) {
        throw pneusim::ConfigError("--mode: unknown mode '" + mode_name + "'");
      }
      cfg.tuner.mode = mode;
      return cmd_track(cfg);
    }
    if (app.got_subcommand("compare")) return cmd_compare(cfg);
    if (app.got_subcommand("identify")) return cmd_identify(cfg);
    if (app.got_subcommand("sweep")) return cmd_sweep(cfg, sweep_param, sweep_values);
    if (app.got_subcommand("dump-config")) {
      std::cout << dump_config(cfg);
      return 0;
    }
    return 0;
  } catch (const pneusim::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
