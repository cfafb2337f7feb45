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

#include "pneusim/cascade.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pneusim {

ControllerParams ControllerParams::defaults() {
  ControllerParams p;
  p.inner = {8.0e-2, 2.0e-5, 0.0};
  p.outer = {1.0e-1, 1.0e-5, 0.0};
  p.kff0 = 5.0e-3;
  return p;
}

double ff_delta(double kff, double ref_rate_deg_s) {
  return kff * ref_rate_deg_s;
}

double fb_delta(const LoopState& state, double e_deg, const PidGains& gains,
                double dt_s) {
  return gains.kp * (e_deg - state.outer_e1) + gains.ki * e_deg * dt_s +
         gains.kd * (e_deg - 2.0 * state.outer_e1 + state.outer_e2) / dt_s;
}

double fb_increment(const LoopState& state, double e_deg,
                    const PidGains& gains, double dt_s) {
  return gains.kp * e_deg + gains.ki * state.outer_integral +
         gains.kd * (e_deg - state.outer_e1) / dt_s;
}

double outer_step(LoopState& state, double theta_d_deg, double theta_meas_deg,
                  double ref_rate_deg_s, double live_kp, double live_kff,
                  const ControllerParams& params, double p_min_kpa,
                  double p_max_kpa, double dt_s) {
  if (!(dt_s > 0.0)) {
    throw std::invalid_argument("outer_step: dt must be > 0");
  }
  const double e = theta_d_deg - theta_meas_deg;
  PidGains gains = params.outer;
  gains.kp = live_kp;  // live proportional gain from the tuner

  double delta_fb = 0.0;
  double integral_next = state.outer_integral;
  if (params.outer_law == OuterLaw::kVelocity) {
    delta_fb = fb_delta(state, e, gains, dt_s);
  } else {
    integral_next += e * dt_s;
    LoopState probe = state;
    probe.outer_integral = integral_next;
    delta_fb = fb_increment(probe, e, gains, dt_s);
  }

  const double raw = state.p_ref_kpa + ff_delta(live_kff, ref_rate_deg_s) +
                     delta_fb;
  const double p_d = std::clamp(raw, p_min_kpa, p_max_kpa);

  // Conditional integration: hold the accumulator while the reference
  // pressure is pinned at a limit and the error pushes further into it.
  const bool windup = (raw > p_max_kpa && e > 0.0) ||
                      (raw < p_min_kpa && e < 0.0);
  if (params.outer_law == OuterLaw::kIncrement && !windup) {
    state.outer_integral = integral_next;
  }

  state.outer_e2 = state.outer_e1;
  state.outer_e1 = e;
  state.p_ref_kpa = p_d;
  return p_d;
}

double inner_step(LoopState& state, double p_d_kpa, double p_meas_kpa,
                  const PidGains& gains, double u_neutral_v, double dt_s) {
  if (!(dt_s > 0.0)) {
    throw std::invalid_argument("inner_step: dt must be > 0");
  }
  const double e = p_d_kpa - p_meas_kpa;
  const double integral_next = state.inner_integral + e * dt_s;
  const double derivative = (e - state.inner_e1) / dt_s;
  const double raw = u_neutral_v + gains.kp * e + gains.ki * integral_next +
                     gains.kd * derivative;
  const double u = std::clamp(raw, 0.0, 10.0);
  const bool windup = (raw > 10.0 && e > 0.0) || (raw < 0.0 && e < 0.0);
  if (!windup) {
    state.inner_integral = integral_next;
  }
  state.inner_e1 = e;
  state.u_v = u;
  return u;
}

}  // namespace pneusim
