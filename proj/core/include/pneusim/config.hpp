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

#ifndef PNEUSIM_CONFIG_HPP_
#define PNEUSIM_CONFIG_HPP_

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "pneusim/cascade.hpp"
#include "pneusim/plant.hpp"
#include "pneusim/reference.hpp"
#include "pneusim/tuner.hpp"

namespace pneusim {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Everything one episode needs. Defaults reproduce the tuned gain tables
/// and the canonical plant; a loaded file only overrides what it names.
struct RunConfig {
  double dt_s = 0.002;  // 500 Hz control and adaptation tick
  std::uint64_t seed = 0;
  double smoothing_alpha = 0.15;  // pseudo-differential filter coefficient
  PlantParams plant;
  ControllerParams controller;
  TunerParams tuner;
  ReferenceSpec reference;
  int identify_cycles = 2;             // triangles run by `identify`
  double move_threshold_deg = 1.0;     // dead-zone width detection threshold
  std::string out_dir = ".";

  static RunConfig defaults();

  /// Re-validates every module-level invariant; throws ConfigError naming
  /// the offending key and constraint.
  void validate() const;

  long tick_count() const;  // duration/dt, validated to be integral
};

/// Parses the flat `section.key = value` format (see README for the
/// grammar). Unknown keys are rejected; missing keys keep their defaults.
RunConfig load_config(const std::string& path);
RunConfig parse_config(std::istream& in);

/// Applies one key/value pair onto an existing config (also used by the
/// sweep command). Throws ConfigError for unknown keys or malformed values.
void apply_key(RunConfig& cfg, const std::string& key,
               const std::string& value);

/// Serializes the full effective config; load(dump(cfg)) == cfg bit-exactly.
std::string dump_config(const RunConfig& cfg);

}  // namespace pneusim

#endif  // PNEUSIM_CONFIG_HPP_
