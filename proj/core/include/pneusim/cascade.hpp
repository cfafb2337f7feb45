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

#ifndef PNEUSIM_CASCADE_HPP_
#define PNEUSIM_CASCADE_HPP_

namespace pneusim {

struct PidGains {
  double kp = 0.0;
  double ki = 0.0;
  double kd = 0.0;
};

/// How the outer feedback contribution to the reference-pressure increment is
/// formed. kIncrement applies the positional PID output as a per-tick
/// pressure increment (the default; the feedback term integrates, which is
/// what gives the loop its authority at the tuned gains). kVelocity uses the
/// classic velocity form whose cumulative sum equals the positional PID.
enum class OuterLaw { kIncrement, kVelocity };

struct ControllerParams {
  PidGains outer;   // kPa/deg, kPa/(deg s), kPa s/deg
  PidGains inner;   // V/kPa, V/(kPa s), V s/kPa
  double kff0 = 5.0e-3;  // feedforward D gain initial value [kPa s/deg]
  OuterLaw outer_law = OuterLaw::kIncrement;

  static ControllerParams defaults();
};

/// Cascade controller memory. p_ref_kpa must be initialized to the plant's
/// starting pressure before the first tick.
struct LoopState {
  double outer_e1 = 0.0;        // e(t-1) [deg]
  double outer_e2 = 0.0;        // e(t-2) [deg]
  double outer_integral = 0.0;  // [deg s]
  double inner_e1 = 0.0;        // [kPa]
  double inner_integral = 0.0;  // [kPa s]
  double p_ref_kpa = 0.0;       // P_d(t-1)
  double u_v = 0.0;             // previous valve command
};

/// Feedforward pressure delta for one tick: K_ff(t) * reference rate.
double ff_delta(double kff, double ref_rate_deg_s);

/// Velocity-form feedback delta:
///   K_P*(e - e1) + K_I*e*dt + K_D*(e - 2 e1 + e2)/dt.
/// gains.kp carries the live proportional gain for this tick.
double fb_delta(const LoopState& state, double e_deg, const PidGains& gains,
                double dt_s);

/// Positional PID evaluated per tick, applied by outer_step as a pressure
/// increment: K_P*e + K_I*I_e + K_D*(e - e1)/dt.
double fb_increment(const LoopState& state, double e_deg,
                    const PidGains& gains, double dt_s);

/// One outer-loop tick: P_d(t) = clamp(P_d(t-1) + dP_ff + dP_fb). Updates the
/// error history and (for the increment law) the conditionally-integrated
/// error accumulator. Returns P_d(t).
double outer_step(LoopState& state, double theta_d_deg, double theta_meas_deg,
                  double ref_rate_deg_s, double live_kp, double live_kff,
                  const ControllerParams& params, double p_min_kpa,
                  double p_max_kpa, double dt_s);

/// One inner-loop tick: positional PID around the valve neutral with
/// conditional-integration anti-windup; output clamped to [0, 10] V.
double inner_step(LoopState& state, double p_d_kpa, double p_meas_kpa,
                  const PidGains& gains, double u_neutral_v, double dt_s);

}  // namespace pneusim

#endif  // PNEUSIM_CASCADE_HPP_
