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

#include "pneusim/plant.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pneusim {
namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
  x += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t rotl(std::uint64_t v, int k) {
  return (v << k) | (v >> (64 - k));
}

}  // namespace

Rng::Rng(std::uint64_t seed) {
  // xoshiro256++ seeded through splitmix64.
  for (auto& w : s_) w = splitmix64(seed);
}

std::uint64_t Rng::next_u64() {
  const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Rng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  // Box-Muller; u1 kept away from 0.
  double u1 = 0.0;
  do {
    u1 = uniform();
  } while (u1 <= 0.0);
  const double u2 = uniform();
  const double mag = std::sqrt(-2.0 * std::log(u1));
  const double ang = 6.283185307179586 * u2;
  spare_ = mag * std::sin(ang);
  has_spare_ = true;
  return mag * std::cos(ang);
}

PlantParams PlantParams::defaults() {
  PlantParams p;
  // Five asymmetric operators; the unloading radii are wider than the
  // loading radii, shifting the loop, and the concave input shaping makes
  // the upper reversal dead zones wider than the lower ones.
  const double r_load[5] = {0.0, 20.0, 40.0, 60.0, 80.0};
  const double r_unload[5] = {0.0, 50.0, 90.0, 130.0, 170.0};
  const double profile[5] = {1.0, 1.0, 1.2, 1.2, 1.0};
  // Scale weights so theta_qs(p_max) = q*p_max + sum w_j*(p_max - r+_j)
  // equals 60 deg exactly.
  double denom = 0.0;
  for (int j = 0; j < 5; ++j) denom += profile[j] * (p.p_max_kpa - r_unload[j]);
  const double scale = (60.0 - p.linear_gain * p.p_max_kpa) / denom;
  p.bank.clear();
  for (int j = 0; j < 5; ++j) {
    p.bank.push_back({profile[j] * scale, r_load[j], r_unload[j]});
  }
  return p;
}

double PlantParams::shape(double p_kpa) const {
  const double span = p_max_kpa - p_min_kpa;
  if (shape_curvature == 0.0 || span <= 0.0) return p_kpa;
  const double x = (p_kpa - p_min_kpa) / span;
  const double c = shape_curvature;
  return p_min_kpa + span * ((1.0 + c) * x - c * x * x);
}

double PlantParams::theta_span_deg() const {
  double v = linear_gain * p_max_kpa;
  for (const PlayOperator& op : bank) {
    v += op.weight * (shape(p_max_kpa) - op.r_unload);
  }
  return v;
}

PlantState PlantState::rest(const PlantParams& params) {
  PlantState s;
  s.p_kpa = params.p_min_kpa;
  s.play.assign(params.bank.size(), params.shape(params.p_min_kpa));
  s.theta_qs_deg = hysteresis_output(params, s);
  s.theta_deg = s.theta_qs_deg;
  return s;
}

double play_update(double y_prev, double input, double r_load,
                   double r_unload) {
  return std::max(input - r_unload, std::min(input + r_load, y_prev));
}

double hysteresis_output(const PlantParams& params, const PlantState& state) {
  double v = params.linear_gain * state.p_kpa;
  for (std::size_t j = 0; j < params.bank.size(); ++j) {
    v += params.bank[j].weight * state.play[j];
  }
  return v;
}

void apply_pressure(PlantState& state, double p_kpa,
                    const PlantParams& params) {
  state.p_kpa = std::clamp(p_kpa, params.p_min_kpa, params.p_max_kpa);
  const double s = params.shape(state.p_kpa);
  for (std::size_t j = 0; j < params.bank.size(); ++j) {
    state.play[j] = play_update(state.play[j], s, params.bank[j].r_load,
                                params.bank[j].r_unload);
  }
  state.theta_qs_deg = hysteresis_output(params, state);
}

void step_plant(PlantState& state, double u_v, double dt_s,
                const PlantParams& params) {
  if (!std::isfinite(u_v)) {
    throw std::invalid_argument("step_plant: non-finite valve command");
  }
  if (!(dt_s > 0.0)) {
    throw std::invalid_argument("step_plant: dt must be > 0");
  }
  const double p_next =
      state.p_kpa + params.valve_gain * (u_v - params.valve_neutral_v) * dt_s;
  apply_pressure(state, p_next, params);
  state.theta_deg +=
      (dt_s / params.lag_tau_s) * (state.theta_qs_deg - state.theta_deg);
  state.t_s += dt_s;
}

std::pair<double, double> read_sensors(const PlantState& state,
                                       const PlantParams& params, Rng& rng) {
  double theta = state.theta_deg;
  if (params.noise_sigma_deg > 0.0) {
    theta += params.noise_sigma_deg * rng.normal();
  }
  if (params.quantization_deg > 0.0) {
    theta = std::round(theta / params.quantization_deg) *
            params.quantization_deg;
  }
  return {theta, state.p_kpa};
}

}  // namespace pneusim
