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

#ifndef PNEUSIM_TUNER_HPP_
#define PNEUSIM_TUNER_HPP_

namespace pneusim {

enum class TunerMode { kPid, kFfStatic, kFfAdaptive, kFbAdaptive, kTwoDof };

const char* tuner_mode_name(TunerMode mode);
bool tuner_mode_from_name(const char* name, TunerMode* out);

/// (M, b, c) of one gain-modulation branch. b correlates with reference
/// velocity, c with reference acceleration; both keep the denominators
/// strictly positive.
struct BranchParams {
  double m = 0.0;
  double b = 1.0;
  double c = 1.0;
};

/// One adapted gain channel. neg_accel drives ticks with decelerating
/// reference curvature (accel < 0), pos_accel the accel > 0 branch; both
/// default to the same values (symmetric unification) but may differ.
struct ChannelParams {
  BranchParams neg_accel;
  BranchParams pos_accel;
};

struct TunerParams {
  ChannelParams fb;  // feedback proportional channel [M: kPa/(deg s)]
  ChannelParams ff;  // feedforward derivative channel [M: kPa/deg]
  double theta_max_deg = 60.0;  // full bending span, the angle-factor pivot
  double kappa = 1.0;   // error compression exponent (feedback channel)
  double lambda = 0.2;  // gain-centering exponent (feedback channel)
  double mu = 0.6;      // natural-decrease magnification (feedforward channel)
  TunerMode mode = TunerMode::kTwoDof;
  // Keep the printed form of the natural-decrease modifier, whose trailing
  // direction factor flips the sign of every decrement. Off by default: the
  // intended behavior magnifies negative adjustments by (1+mu) and leaves
  // positive ones alone.
  bool literal_natural_decrease = false;

  static TunerParams defaults();
};

/// Live dynamic gains plus their frozen initial values (the cutoff floors).
struct TunerState {
  double kp = 0.0;    // K_P(t)  [kPa/deg]
  double kp0 = 0.0;   // K_P(0)
  double kff = 0.0;   // K_ff(t) [kPa s/deg]
  double kff0 = 0.0;  // K_ff(0)
  int last_direction = 0;  // D(t) of the most recent tick

  /// kp0/kff0 come from the controller's static gains; mode kPid forces the
  /// feedforward path off entirely (K_ff = 0).
  static TunerState init(double kp0, double kff0, TunerMode mode);
};

/// Directional modulator D = -sign(rate * accel): +1 while the reference
/// decelerates toward a U-turn (gains grow), -1 while it speeds away
/// (gains shrink), 0 when either kinematic factor is exactly zero.
int direction(double ref_rate, double ref_accel);

/// Raw gain modulation for one channel and tick. The angle factor is the
/// reference itself on the accel < 0 branch and (theta_max - reference) on
/// the accel > 0 branch; zero acceleration returns exactly zero.
double raw_gain_delta(double ref_deg, double ref_rate, double ref_accel,
                      const ChannelParams& channel, double theta_max_deg,
                      int dir);

/// Error-driven stabilization of a feedback-gain adjustment:
///   dK * (max{1,|e|})^(-kappa*D) * (K_P(0)/K_P(t-1))^(lambda*D).
/// Large errors compress growth and accelerate decay; an elevated gain level
/// does the same, centering K_P on its initial value.
double fb_stabilize(double dkp, double e_deg, double kp_prev, double kp0,
                    double kappa, double lambda, int dir);

/// Natural-gain-decreasing stabilization of a feedforward-gain adjustment:
/// decrements (D = -1) are magnified by (1+mu), increments pass unchanged,
/// so a symmetric kinematic excursion leaves the gain back on its floor.
double ff_stabilize(double dkff, double mu, int dir, bool literal_form);

/// Cutoff: G = max{G0, G_prev + dG}. Dynamic gains never drop below their
/// initial values.
double cutoff_update(double g_prev, double dg, double g0);

/// One tuner tick: for each channel the mode enables, runs
/// direction -> raw_gain_delta -> stabilizer -> cutoff_update; disabled
/// channels hold their initial values.
void tuner_step(TunerState& state, const TunerParams& params, double ref_deg,
                double ref_rate, double ref_accel, double e_deg);

}  // namespace pneusim

#endif  // PNEUSIM_TUNER_HPP_
