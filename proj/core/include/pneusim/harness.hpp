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

#ifndef PNEUSIM_HARNESS_HPP_
#define PNEUSIM_HARNESS_HPP_

#include <utility>
#include <vector>

#include "pneusim/config.hpp"
#include "pneusim/tuner.hpp"

namespace pneusim {

struct TraceSample {
  double t_s = 0.0;
  double theta_ref_deg = 0.0;
  double theta_meas_deg = 0.0;
  double error_deg = 0.0;
  double p_ref_kpa = 0.0;
  double p_meas_kpa = 0.0;
  double u_v = 0.0;
  double kp_gain = 0.0;   // K_P(t) after cutoff
  double kff_gain = 0.0;  // K_ff(t) after cutoff
};

struct EpisodeTrace {
  double dt_s = 0.0;
  std::vector<TraceSample> samples;  // tick_count()+1 rows, t = k*dt
};

/// Five-column episode summary. abs_e_ave_pct is normalized by the
/// reference's peak-to-peak range over the episode.
struct MetricsReport {
  double e_max_deg = 0.0;
  double e_min_deg = 0.0;
  double abs_e_ave_pct = 0.0;
  double rmse_deg = 0.0;
  double var_deg2 = 0.0;  // population variance
};

/// Hysteresis identification result. `points` is the dynamic sensor loop
/// (what the CSV carries); the dead-zone analysis runs on a lag-free
/// quasi-static replay of the same prescribed pressure profile so the
/// widths are rate-independent quantities.
struct HysteresisLoop {
  std::vector<std::pair<double, double>> points;  // (P_meas, theta_meas)
  double loop_area_deg_kpa = 0.0;    // enclosed area of the steady cycle
  double upper_deadzone_kpa = 0.0;   // excursion to move theta after the apex
  double lower_deadzone_kpa = 0.0;   // same after the trough
};

struct ComparisonRow {
  TunerMode mode = TunerMode::kPid;
  MetricsReport metrics;
};

/// Runs one closed-loop episode: per tick, read sensors -> pseudo-diffs ->
/// tuner -> outer loop -> inner loop -> plant step. Deterministic for a
/// given config+seed.
EpisodeTrace run_episode(const RunConfig& cfg);

/// Drives the plant's inner pressure loop along the configured triangular
/// waveform (outer loop disabled) for cfg.identify_cycles cycles and
/// analyzes the steady-state loop.
HysteresisLoop identify_hysteresis(const RunConfig& cfg);

MetricsReport compute_metrics(const EpisodeTrace& trace);

/// One episode per tuner mode (identical seeds), executed concurrently;
/// results ordered pid, ff_static, ff_adaptive, fb_adaptive, two_dof.
std::vector<ComparisonRow> compare_methods(const RunConfig& cfg);
std::vector<ComparisonRow> compare_methods(const RunConfig& cfg,
                                           const std::vector<TunerMode>& modes);

}  // namespace pneusim

#endif  // PNEUSIM_HARNESS_HPP_
