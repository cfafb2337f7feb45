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

#ifndef PNEUSIM_PLANT_HPP_
#define PNEUSIM_PLANT_HPP_

#include <cstdint>
#include <utility>
#include <vector>

namespace pneusim {

/// Deterministic RNG for sensor noise: mt19937_64 stream with a hand-rolled
/// Box-Muller normal so traces stay byte-identical across standard libraries
/// (std::normal_distribution's algorithm is implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();
  double uniform();  // [0, 1)
  double normal();   // standard normal

 private:
  std::uint64_t s_[4];
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// One asymmetric play (backlash) element. The state trails the driving
/// signal inside a band: r_load widens the band below the input (engaged
/// while unloading), r_unload above it (engaged while loading).
struct PlayOperator {
  double weight = 0.0;    // deg per unit of play state
  double r_load = 0.0;    // r-  [kPa]
  double r_unload = 0.0;  // r+  [kPa], >= r_load for the wider upper dead zone
};

struct PlantParams {
  double p_min_kpa = 0.0;
  double p_max_kpa = 500.0;
  double valve_gain = 80.0;       // kPa/(V s)
  double valve_neutral_v = 5.0;   // u0
  std::vector<PlayOperator> bank;
  double linear_gain = 0.02;      // q [deg/kPa]
  // Concavity of the pressure shaping the play bank sees; 0 = plays act on
  // raw pressure, >0 widens reversal dead zones at high pressure relative to
  // low pressure (the measured asymmetry of the real actuator).
  double shape_curvature = 0.5;
  double lag_tau_s = 0.05;        // mechanical first-order lag
  double noise_sigma_deg = 0.0;   // angle sensor noise, 1 sigma
  double quantization_deg = 0.0;  // angle sensor quantization step

  /// Default bank calibrated so theta_qs(p_max) = 60 deg exactly.
  static PlantParams defaults();

  /// Monotone concave input map for the play bank; endpoint-preserving
  /// (shape(p_min) = p_min, shape(p_max) = p_max).
  double shape(double p_kpa) const;

  double theta_span_deg() const;  // theta_qs at p_max held long
};

struct PlantState {
  double p_kpa = 0.0;
  std::vector<double> play;      // y_j, one per bank operator
  double theta_qs_deg = 0.0;     // quasi-static hysteresis output
  double theta_deg = 0.0;        // lagged bending angle
  double t_s = 0.0;

  static PlantState rest(const PlantParams& params);
};

/// Asymmetric play update: y = max(input - r_unload, min(input + r_load, y_prev)).
/// Idempotent while the input sits inside the band.
double play_update(double y_prev, double input, double r_load, double r_unload);

/// theta_qs = q*P + sum_j w_j*y_j for the current state.
double hysteresis_output(const PlantParams& params, const PlantState& state);

/// Advances the plant one Euler tick: valve flow integration with hard
/// pressure saturation, play bank update, first-order mechanical lag.
/// u is clamped to [0, 10] V by the caller; non-finite u throws.
void step_plant(PlantState& state, double u_v, double dt_s,
                const PlantParams& params);

/// Prescribes the pressure directly (no valve, no lag advance): updates the
/// play bank and theta_qs only. Used for rate-independence checks and
/// quasi-static loop analysis.
void apply_pressure(PlantState& state, double p_kpa, const PlantParams& params);

/// Sensor readout: (theta_meas [deg], p_meas [kPa]). Gaussian angle noise and
/// quantization if configured; pressure reads back exactly.
std::pair<double, double> read_sensors(const PlantState& state,
                                       const PlantParams& params, Rng& rng);

}  // namespace pneusim

#endif  // PNEUSIM_PLANT_HPP_
