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

#ifndef PNEUSIM_REFERENCE_HPP_
#define PNEUSIM_REFERENCE_HPP_

#include <cstdint>
#include <vector>

namespace pneusim {

enum class ReferenceKind {
  kMultiSine,           // offset + sum of sine terms, bending angle [deg]
  kPiecewiseSine,       // half-cosine eased waypoint segments [deg]
  kTriangularPressure,  // single symmetric triangle 0->peak->0 [kPa]
};

struct SineTerm {
  double amplitude = 0.0;     // deg (bending) or kPa (pressure)
  double frequency_hz = 0.0;
  double phase_rad = 0.0;
};

/// Parametric description of a reference bending trajectory or pressure
/// waveform. A spec plus a time stamp fully determines the sample, so the
/// generator is rate-of-call independent.
struct ReferenceSpec {
  ReferenceKind kind = ReferenceKind::kMultiSine;
  double duration_s = 30.0;
  double offset = 30.0;        // deg or kPa
  std::vector<SineTerm> terms;
  std::uint64_t seed = 0;      // for randomized variants

  /// 30 s multi-sine with rapid variations, spanning 5..55 deg.
  static ReferenceSpec default_short();
  /// 120 s multi-sine with gradual changes, spanning 5..55 deg.
  static ReferenceSpec default_long();
  /// Single pressure triangle 0 -> peak -> 0 over `duration_s`.
  static ReferenceSpec triangular(double peak_kpa, double duration_s);
  /// Randomized multi-sine kept inside [margin, theta_max - margin] deg.
  static ReferenceSpec random_multi_sine(std::uint64_t seed, double duration_s,
                                         double theta_max_deg);

  // Conservative bounds (offset +- sum of |amplitude|); the generated
  // waveform never leaves [lower_bound, upper_bound].
  double lower_bound() const;
  double upper_bound() const;
};

/// Evaluates the reference at time t in [0, duration]. Pure function of
/// (spec, t); throws std::out_of_range outside the episode window.
double gen_reference(const ReferenceSpec& spec, double t_s);

/// Analytic first derivative of the reference (deg/s or kPa/s). Used by
/// analysis code; the control loop only ever sees pseudo-differentials.
double gen_reference_rate(const ReferenceSpec& spec, double t_s);

}  // namespace pneusim

#endif  // PNEUSIM_REFERENCE_HPP_
