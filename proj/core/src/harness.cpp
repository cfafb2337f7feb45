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

#include "pneusim/harness.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <stdexcept>

#include "pneusim/cascade.hpp"
#include "pneusim/plant.hpp"
#include "pneusim/pseudo_diff.hpp"

namespace pneusim {

EpisodeTrace run_episode(const RunConfig& cfg) {
  cfg.validate();
  if (cfg.reference.kind == ReferenceKind::kTriangularPressure) {
    throw ConfigError(
        "run_episode: reference must be a bending trajectory "
        "(use identify for triangular_pressure)");
  }

  const double dt = cfg.dt_s;
  const long ticks = cfg.tick_count();

  PlantState plant = PlantState::rest(cfg.plant);
  LoopState loop;
  loop.p_ref_kpa = plant.p_kpa;  // P_d(0) = initial plant pressure
  loop.u_v = cfg.plant.valve_neutral_v;
  TunerParams tuner_params = cfg.tuner;
  TunerState tuner = TunerState::init(cfg.controller.outer.kp,
                                      cfg.controller.kff0, tuner_params.mode);
  PseudoDiff diff(cfg.smoothing_alpha);
  Rng rng(cfg.seed);

  EpisodeTrace trace;
  trace.dt_s = dt;
  trace.samples.reserve(static_cast<std::size_t>(ticks) + 1);

  for (long k = 0; k <= ticks; ++k) {
    const double t = static_cast<double>(k) * dt;
    const double theta_d = gen_reference(cfg.reference, t);
    const auto [theta_meas, p_meas] = read_sensors(plant, cfg.plant, rng);
    const PseudoDiff::Output d = diff.step(theta_d, dt);
    const double e = theta_d - theta_meas;

    tuner_step(tuner, tuner_params, d.value, d.rate, d.accel, e);
    const double p_d =
        outer_step(loop, theta_d, theta_meas, d.rate, tuner.kp, tuner.kff,
                   cfg.controller, cfg.plant.p_min_kpa, cfg.plant.p_max_kpa,
                   dt);
    const double u =
        inner_step(loop, p_d, p_meas, cfg.controller.inner,
                   cfg.plant.valve_neutral_v, dt);

    trace.samples.push_back(
        {t, theta_d, theta_meas, e, p_d, p_meas, u, tuner.kp, tuner.kff});
    step_plant(plant, u, dt, cfg.plant);
  }
  return trace;
}

MetricsReport compute_metrics(const EpisodeTrace& trace) {
  if (trace.samples.empty()) {
    throw std::invalid_argument("compute_metrics: empty trace");
  }
  const double n = static_cast<double>(trace.samples.size());
  double e_max = -std::numeric_limits<double>::infinity();
  double e_min = std::numeric_limits<double>::infinity();
  double sum = 0.0, sum_sq = 0.0, sum_abs = 0.0;
  double ref_min = std::numeric_limits<double>::infinity();
  double ref_max = -std::numeric_limits<double>::infinity();
  for (const TraceSample& s : trace.samples) {
    e_max = std::max(e_max, s.error_deg);
    e_min = std::min(e_min, s.error_deg);
    sum += s.error_deg;
    sum_sq += s.error_deg * s.error_deg;
    sum_abs += std::fabs(s.error_deg);
    ref_min = std::min(ref_min, s.theta_ref_deg);
    ref_max = std::max(ref_max, s.theta_ref_deg);
  }
  const double mean = sum / n;
  const double mean_sq = sum_sq / n;
  const double range = ref_max - ref_min;

  MetricsReport r;
  r.e_max_deg = e_max;
  r.e_min_deg = e_min;
  r.rmse_deg = std::sqrt(mean_sq);
  r.var_deg2 = mean_sq - mean * mean;
  const double mean_abs = sum_abs / n;
  r.abs_e_ave_pct =
      range > 0.0 ? 100.0 * mean_abs / range
                  : (mean_abs == 0.0 ? 0.0
                                     : std::numeric_limits<double>::infinity());
  return r;
}

namespace {

// Pressure excursion from the reversal at `start` until theta_qs has moved
// by `threshold` from its reversal value, scanning a quasi-static replay.
double deadzone_width(const std::vector<std::pair<double, double>>& qs,
                      std::size_t start, std::size_t end, double threshold) {
  const double theta0 = qs[start].second;
  for (std::size_t i = start + 1; i < end; ++i) {
    if (std::fabs(qs[i].second - theta0) >= threshold) {
      return std::fabs(qs[i].first - qs[start].first);
    }
  }
  return std::fabs(qs[end - 1].first - qs[start].first);
}

}  // namespace

HysteresisLoop identify_hysteresis(const RunConfig& cfg) {
  cfg.validate();
  if (cfg.reference.kind != ReferenceKind::kTriangularPressure) {
    throw ConfigError("identify: reference.kind must be triangular_pressure");
  }
  if (cfg.identify_cycles < 1) {
    throw ConfigError("identify: identify_cycles must be >= 1");
  }

  const double dt = cfg.dt_s;
  const long ticks_per_cycle = cfg.tick_count();
  const long total = ticks_per_cycle * cfg.identify_cycles;

  // Dynamic run: the inner pressure loop chases the triangle, the outer
  // loop stays disabled; sensors recorded every tick.
  PlantState plant = PlantState::rest(cfg.plant);
  LoopState loop;
  loop.u_v = cfg.plant.valve_neutral_v;
  Rng rng(cfg.seed);

  HysteresisLoop out;
  out.points.reserve(static_cast<std::size_t>(total) + 1);
  for (long k = 0; k <= total; ++k) {
    const double t = static_cast<double>(k) * dt;
    const double t_cycle =
        k == total ? cfg.reference.duration_s
                   : std::fmod(t, cfg.reference.duration_s);
    const double p_d = gen_reference(cfg.reference, t_cycle);
    const auto [theta_meas, p_meas] = read_sensors(plant, cfg.plant, rng);
    out.points.emplace_back(p_meas, theta_meas);
    const double u = inner_step(loop, p_d, p_meas, cfg.controller.inner,
                                cfg.plant.valve_neutral_v, dt);
    step_plant(plant, u, dt, cfg.plant);
  }

  // Quasi-static replay of the same prescribed profile for the analysis:
  // rate-independent, lag-free.
  PlantState qs_state = PlantState::rest(cfg.plant);
  std::vector<std::pair<double, double>> qs;
  qs.reserve(static_cast<std::size_t>(total) + 1);
  for (long k = 0; k <= total; ++k) {
    const double t = static_cast<double>(k) * dt;
    const double t_cycle =
        k == total ? cfg.reference.duration_s
                   : std::fmod(t, cfg.reference.duration_s);
    apply_pressure(qs_state, gen_reference(cfg.reference, t_cycle), cfg.plant);
    qs.emplace_back(qs_state.p_kpa, qs_state.theta_qs_deg);
  }

  // Steady cycle: the last one (the loop is periodic from the second cycle
  // on). Apex sits mid-cycle, troughs at the cycle boundaries.
  const long c0 = ticks_per_cycle * (cfg.identify_cycles - 1);
  const auto trough = static_cast<std::size_t>(c0);
  const auto apex = static_cast<std::size_t>(c0 + ticks_per_cycle / 2);
  const auto cycle_end = static_cast<std::size_t>(total) + 1;

  out.lower_deadzone_kpa =
      deadzone_width(qs, trough, apex + 1, cfg.move_threshold_deg);
  out.upper_deadzone_kpa =
      deadzone_width(qs, apex, cycle_end, cfg.move_threshold_deg);

  // Enclosed area of the steady cycle via the shoelace sum; positive when
  // the unloading branch lies above the loading branch.
  double twice_area = 0.0;
  for (std::size_t i = trough; i + 1 < cycle_end; ++i) {
    twice_area += (qs[i].first - qs[i + 1].first) * (qs[i].second + qs[i + 1].second);
  }
  out.loop_area_deg_kpa = 0.5 * twice_area;
  return out;
}

std::vector<ComparisonRow> compare_methods(const RunConfig& cfg) {
  static const std::vector<TunerMode> kAll = {
      TunerMode::kPid, TunerMode::kFfStatic, TunerMode::kFfAdaptive,
      TunerMode::kFbAdaptive, TunerMode::kTwoDof};
  return compare_methods(cfg, kAll);
}

std::vector<ComparisonRow> compare_methods(
    const RunConfig& cfg, const std::vector<TunerMode>& modes) {
  std::vector<std::future<MetricsReport>> futures;
  futures.reserve(modes.size());
  for (TunerMode mode : modes) {
    RunConfig c = cfg;
    c.tuner.mode = mode;
    futures.push_back(std::async(std::launch::async, [c]() {
      return compute_metrics(run_episode(c));
    }));
  }
  std::vector<ComparisonRow> rows;
  rows.reserve(modes.size());
  for (std::size_t i = 0; i < modes.size(); ++i) {
    rows.push_back({modes[i], futures[i].get()});
  }
  return rows;
}

}  // namespace pneusim
