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

#include "pneusim/pseudo_diff.hpp"

#include <cmath>
#include <stdexcept>

namespace pneusim {

PseudoDiff::PseudoDiff(double smoothing_alpha) : alpha_(smoothing_alpha) {
  if (!(smoothing_alpha > 0.0 && smoothing_alpha <= 1.0)) {
    throw std::invalid_argument("PseudoDiff: smoothing alpha must be in (0,1]");
  }
}

void PseudoDiff::reset() {
  prev1_ = prev2_ = 0.0;
  rate_ = accel_ = 0.0;
  ticks_ = 0;
}

PseudoDiff::Output PseudoDiff::step(double sample, double dt_s) {
  if (!std::isfinite(sample)) {
    throw std::invalid_argument("PseudoDiff: non-finite sample");
  }
  if (!(dt_s > 0.0)) {
    throw std::invalid_argument("PseudoDiff: dt must be > 0");
  }
  if (ticks_ == 0) {
    // Warm start: pretend the signal has been at the first sample forever.
    prev1_ = prev2_ = sample;
  }
  if (ticks_ < 2) {
    rate_ = 0.0;
    accel_ = 0.0;
  } else {
    const double raw_rate = (sample - prev1_) / dt_s;
    const double raw_accel = (sample - 2.0 * prev1_ + prev2_) / (dt_s * dt_s);
    rate_ += alpha_ * (raw_rate - rate_);
    accel_ += alpha_ * (raw_accel - accel_);
  }
  prev2_ = prev1_;
  prev1_ = sample;
  ++ticks_;
  return {sample, rate_, accel_};
}

}  // namespace pneusim
