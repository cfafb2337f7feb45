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

#include "pneusim/reference.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "pneusim/plant.hpp"  // Rng

namespace pneusim {
namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

double multi_sine(const ReferenceSpec& spec, double t) {
  double v = spec.offset;
  for (const SineTerm& term : spec.terms) {
    v += term.amplitude *
         std::sin(kTwoPi * term.frequency_hz * t + term.phase_rad);
  }
  return v;
}

double multi_sine_rate(const ReferenceSpec& spec, double t) {
  double v = 0.0;
  for (const SineTerm& term : spec.terms) {
    const double w = kTwoPi * term.frequency_hz;
    v += term.amplitude * w * std::cos(w * t + term.phase_rad);
  }
  return v;
}

// Waypoint profile: equal-length segments, one per term; segment k eases
// from the previous level to offset + amplitude_k with a half-cosine.
double piecewise_sine(const ReferenceSpec& spec, double t) {
  if (spec.terms.empty()) return spec.offset;
  const double seg = spec.duration_s / static_cast<double>(spec.terms.size());
  auto idx = static_cast<std::size_t>(t / seg);
  if (idx >= spec.terms.size()) idx = spec.terms.size() - 1;
  const double from =
      idx == 0 ? spec.offset : spec.offset + spec.terms[idx - 1].amplitude;
  const double to = spec.offset + spec.terms[idx].amplitude;
  const double local = (t - static_cast<double>(idx) * seg) / seg;
  const double ease = 0.5 * (1.0 - std::cos(local * kTwoPi / 2.0));
  return from + (to - from) * ease;
}

double piecewise_sine_rate(const ReferenceSpec& spec, double t) {
  if (spec.terms.empty()) return 0.0;
  const double seg = spec.duration_s / static_cast<double>(spec.terms.size());
  auto idx = static_cast<std::size_t>(t / seg);
  if (idx >= spec.terms.size()) idx = spec.terms.size() - 1;
  const double from =
      idx == 0 ? spec.offset : spec.offset + spec.terms[idx - 1].amplitude;
  const double to = spec.offset + spec.terms[idx].amplitude;
  const double local = (t - static_cast<double>(idx) * seg) / seg;
  return (to - from) * 0.5 * (kTwoPi / 2.0) * std::sin(local * kTwoPi / 2.0) /
         seg;
}

double triangle(const ReferenceSpec& spec, double t) {
  const double peak = spec.terms.empty() ? 0.0 : spec.terms.front().amplitude;
  const double x = t / spec.duration_s;  // 0..1
  return spec.offset + peak * (1.0 - std::fabs(2.0 * x - 1.0));
}

double triangle_rate(const ReferenceSpec& spec, double t) {
  const double peak = spec.terms.empty() ? 0.0 : spec.terms.front().amplitude;
  const double slope = 2.0 * peak / spec.duration_s;
  return t < 0.5 * spec.duration_s ? slope : -slope;
}

}  // namespace

ReferenceSpec ReferenceSpec::default_short() {
  ReferenceSpec spec;
  spec.kind = ReferenceKind::kMultiSine;
  spec.duration_s = 30.0;
  spec.offset = 30.0;
  // Periods 10 s, 6 s, 3.3 s; amplitudes sum to 25 so the trajectory spans
  // 5..55 deg. Phases -pi/2 start every term at its minimum: the episode
  // begins at 5 deg with zero initial velocity.
  spec.terms = {{14.0, 1.0 / 10.0, -1.5707963267948966},
                {8.0, 1.0 / 6.0, -1.5707963267948966},
                {3.0, 1.0 / 3.3, -1.5707963267948966}};
  return spec;
}

ReferenceSpec ReferenceSpec::default_long() {
  ReferenceSpec spec;
  spec.kind = ReferenceKind::kMultiSine;
  spec.duration_s = 120.0;
  spec.offset = 30.0;
  spec.terms = {{17.0, 1.0 / 60.0, -1.5707963267948966},
                {8.0, 1.0 / 35.0, -1.5707963267948966}};
  return spec;
}

ReferenceSpec ReferenceSpec::triangular(double peak_kpa, double duration_s) {
  ReferenceSpec spec;
  spec.kind = ReferenceKind::kTriangularPressure;
  spec.duration_s = duration_s;
  spec.offset = 0.0;
  spec.terms = {{peak_kpa, 0.0, 0.0}};
  return spec;
}

ReferenceSpec ReferenceSpec::random_multi_sine(std::uint64_t seed,
                                               double duration_s,
                                               double theta_max_deg) {
  Rng rng(seed);
  ReferenceSpec spec;
  spec.kind = ReferenceKind::kMultiSine;
  spec.duration_s = duration_s;
  spec.seed = seed;
  spec.offset = 0.5 * theta_max_deg;
  const int n_terms = 2 + static_cast<int>(rng.next_u64() % 3);  // 2..4
  double total = 0.0;
  std::vector<SineTerm> terms;
  for (int i = 0; i < n_terms; ++i) {
    SineTerm term;
    term.amplitude = 0.2 + rng.uniform();  // relative; rescaled below
    term.frequency_hz = 0.05 + 0.35 * rng.uniform();
    term.phase_rad = kTwoPi * rng.uniform();
    total += term.amplitude;
    terms.push_back(term);
  }
  // Scale so offset +- sum(|a|) stays inside [0.05, 0.95]*theta_max.
  const double budget = 0.45 * theta_max_deg;
  for (SineTerm& term : terms) term.amplitude *= budget / total;
  spec.terms = std::move(terms);
  return spec;
}

double ReferenceSpec::lower_bound() const {
  if (kind == ReferenceKind::kTriangularPressure) return offset;
  double sum = 0.0;
  for (const SineTerm& term : terms) sum += std::fabs(term.amplitude);
  if (kind == ReferenceKind::kPiecewiseSine) {
    double lo = offset;
    for (const SineTerm& term : terms)
      lo = std::min(lo, offset + term.amplitude);
    return lo;
  }
  return offset - sum;
}

double ReferenceSpec::upper_bound() const {
  if (kind == ReferenceKind::kTriangularPressure) {
    return offset + (terms.empty() ? 0.0 : terms.front().amplitude);
  }
  if (kind == ReferenceKind::kPiecewiseSine) {
    double hi = offset;
    for (const SineTerm& term : terms)
      hi = std::max(hi, offset + term.amplitude);
    return hi;
  }
  double sum = 0.0;
  for (const SineTerm& term : terms) sum += std::fabs(term.amplitude);
  return offset + sum;
}

double gen_reference(const ReferenceSpec& spec, double t_s) {
  if (!(t_s >= 0.0 && t_s <= spec.duration_s)) {
    throw std::out_of_range("gen_reference: t outside [0, duration]");
  }
  switch (spec.kind) {
    case ReferenceKind::kMultiSine:
      return multi_sine(spec, t_s);
    case ReferenceKind::kPiecewiseSine:
      return piecewise_sine(spec, t_s);
    case ReferenceKind::kTriangularPressure:
      return triangle(spec, t_s);
  }
  throw std::out_of_range("gen_reference: unknown kind");
}

double gen_reference_rate(const ReferenceSpec& spec, double t_s) {
  if (!(t_s >= 0.0 && t_s <= spec.duration_s)) {
    throw std::out_of_range("gen_reference_rate: t outside [0, duration]");
  }
  switch (spec.kind) {
    case ReferenceKind::kMultiSine:
      return multi_sine_rate(spec, t_s);
    case ReferenceKind::kPiecewiseSine:
      return piecewise_sine_rate(spec, t_s);
    case ReferenceKind::kTriangularPressure:
      return triangle_rate(spec, t_s);
  }
  throw std::out_of_range("gen_reference_rate: unknown kind");
}

}  // namespace pneusim
