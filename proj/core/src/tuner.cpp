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

#include "pneusim/tuner.hpp"

#include <cmath>
#include <cstring>

namespace pneusim {

const char* tuner_mode_name(TunerMode mode) {
  switch (mode) {
    case TunerMode::kPid:
      return "pid";
    case TunerMode::kFfStatic:
      return "ff_static";
    case TunerMode::kFfAdaptive:
      return "ff_adaptive";
    case TunerMode::kFbAdaptive:
      return "fb_adaptive";
    case TunerMode::kTwoDof:
      return "two_dof";
  }
  return "unknown";
}

bool tuner_mode_from_name(const char* name, TunerMode* out) {
  static constexpr TunerMode kAll[] = {TunerMode::kPid, TunerMode::kFfStatic,
                                       TunerMode::kFfAdaptive,
                                       TunerMode::kFbAdaptive,
                                       TunerMode::kTwoDof};
  for (TunerMode m : kAll) {
    if (std::strcmp(name, tuner_mode_name(m)) == 0) {
      *out = m;
      return true;
    }
  }
  return false;
}

TunerParams TunerParams::defaults() {
  TunerParams p;
  // Symmetric unification: one (M, b, c) triple per channel, applied to both
  // acceleration branches.
  p.fb.neg_accel = {1.4, 20.0, 3.5e5};
  p.fb.pos_accel = p.fb.neg_accel;
  p.ff.neg_accel = {0.15, 30.0, 2.0e5};
  p.ff.pos_accel = p.ff.neg_accel;
  return p;
}

TunerState TunerState::init(double kp0, double kff0, TunerMode mode) {
  TunerState s;
  s.kp0 = kp0;
  s.kp = kp0;
  s.kff0 = kff0;
  s.kff = mode == TunerMode::kPid ? 0.0 : kff0;
  return s;
}

int direction(double ref_rate, double ref_accel) {
  const int sr = (ref_rate > 0.0) - (ref_rate < 0.0);
  const int sa = (ref_accel > 0.0) - (ref_accel < 0.0);
  return -sr * sa;
}

double raw_gain_delta(double ref_deg, double ref_rate, double ref_accel,
                      const ChannelParams& channel, double theta_max_deg,
                      int dir) {
  if (ref_accel == 0.0) return 0.0;
  const BranchParams& br =
      ref_accel < 0.0 ? channel.neg_accel : channel.pos_accel;
  const double angle_factor =
      ref_accel < 0.0 ? ref_deg : theta_max_deg - ref_deg;
  const double abs_rate = std::fabs(ref_rate);
  const double abs_accel = std::fabs(ref_accel);
  return br.m * angle_factor * abs_accel /
         ((br.b + abs_rate) * (br.c + abs_accel)) * static_cast<double>(dir);
}

double fb_stabilize(double dkp, double e_deg, double kp_prev, double kp0,
                    double kappa, double lambda, int dir) {
  const double d = static_cast<double>(dir);
  // |e| is treated as a unitless magnitude.
  const double f = std::pow(std::max(1.0, std::fabs(e_deg)), -kappa * d);
  const double g = std::pow(kp0 / kp_prev, lambda * d);
  return dkp * f * g;
}

double ff_stabilize(double dkff, double mu, int dir, bool literal_form) {
  const double d = static_cast<double>(dir);
  const double h = 1.0 + 0.5 * (1.0 - d) * mu;
  if (literal_form) {
    // As printed the modifier carries a trailing direction factor, which
    // turns every decrement into an increment; kept only for comparison.
    return dkff * h * d;
  }
  return dkff * h;
}

double cutoff_update(double g_prev, double dg, double g0) {
  return std::max(g0, g_prev + dg);
}

void tuner_step(TunerState& state, const TunerParams& params, double ref_deg,
                double ref_rate, double ref_accel, double e_deg) {
  const int dir = direction(ref_rate, ref_accel);
  state.last_direction = dir;

  const bool adapt_fb = params.mode == TunerMode::kFbAdaptive ||
                        params.mode == TunerMode::kTwoDof;
  const bool adapt_ff = params.mode == TunerMode::kFfAdaptive ||
                        params.mode == TunerMode::kTwoDof;

  if (adapt_fb) {
    double dkp = raw_gain_delta(ref_deg, ref_rate, ref_accel, params.fb,
                                params.theta_max_deg, dir);
    dkp = fb_stabilize(dkp, e_deg, state.kp, state.kp0, params.kappa,
                       params.lambda, dir);
    state.kp = cutoff_update(state.kp, dkp, state.kp0);
  } else {
    state.kp = state.kp0;
  }

  if (adapt_ff) {
    double dkff = raw_gain_delta(ref_deg, ref_rate, ref_accel, params.ff,
                                 params.theta_max_deg, dir);
    dkff = ff_stabilize(dkff, params.mu, dir, params.literal_natural_decrease);
    state.kff = cutoff_update(state.kff, dkff, state.kff0);
  } else {
    state.kff = params.mode == TunerMode::kPid ? 0.0 : state.kff0;
  }
}

}  // namespace pneusim
