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

#ifndef PNEUSIM_PSEUDO_DIFF_HPP_
#define PNEUSIM_PSEUDO_DIFF_HPP_

namespace pneusim {

/// Pseudo-differentials of a sampled reference: backward differences divided
/// by dt, each order smoothed by a first-order exponential filter with
/// coefficient alpha in (0, 1] (alpha = 1 -> raw differences).
///
/// The first two ticks output zero for orders 1 and 2 (warm-up), which keeps
/// episode starts free of spurious gain spikes. Order 0 is always the raw
/// sample.
class PseudoDiff {
 public:
  struct Output {
    double value = 0.0;  // deg
    double rate = 0.0;   // deg/s
    double accel = 0.0;  // deg/s^2
  };

  explicit PseudoDiff(double smoothing_alpha = 0.15);

  /// Feeds one sample; dt must be > 0 and the sample finite.
  Output step(double sample, double dt_s);

  void reset();

  double smoothing_alpha() const { return alpha_; }

 private:
  double alpha_;
  double prev1_ = 0.0;  // x(t-1)
  double prev2_ = 0.0;  // x(t-2)
  double rate_ = 0.0;
  double accel_ = 0.0;
  long ticks_ = 0;
};

}  // namespace pneusim

#endif  // PNEUSIM_PSEUDO_DIFF_HPP_
