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

#include "pneusim/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace pneusim {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw ConfigError(key + ": not a number: '" + value + "'");
  }
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const auto v = std::stoull(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw ConfigError(key + ": not an unsigned integer: '" + value + "'");
  }
}

long parse_long(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const long v = std::stol(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw ConfigError(key + ": not an integer: '" + value + "'");
  }
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  throw ConfigError(key + ": expected true/false: '" + value + "'");
}

// "a,b,c; a,b,c; ..." -> rows of exactly `arity` doubles.
std::vector<std::vector<double>> parse_tuple_list(const std::string& key,
                                                  const std::string& value,
                                                  std::size_t arity) {
  std::vector<std::vector<double>> rows;
  std::stringstream ss(value);
  std::string tuple;
  while (std::getline(ss, tuple, ';')) {
    tuple = trim(tuple);
    if (tuple.empty()) continue;
    std::vector<double> row;
    std::stringstream ts(tuple);
    std::string field;
    while (std::getline(ts, field, ',')) {
      row.push_back(parse_double(key, trim(field)));
    }
    if (row.size() != arity) {
      throw ConfigError(key + ": each tuple needs " + std::to_string(arity) +
                        " comma-separated values");
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string fmt_full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void set_branch_m(ChannelParams& ch, double v, int which) {
  if (which != 2) ch.neg_accel.m = v;
  if (which != 1) ch.pos_accel.m = v;
}
void set_branch_b(ChannelParams& ch, double v, int which) {
  if (which != 2) ch.neg_accel.b = v;
  if (which != 1) ch.pos_accel.b = v;
}
void set_branch_c(ChannelParams& ch, double v, int which) {
  if (which != 2) ch.neg_accel.c = v;
  if (which != 1) ch.pos_accel.c = v;
}

void check(bool ok, const char* msg) {
  if (!ok) throw ConfigError(msg);
}

}  // namespace

RunConfig RunConfig::defaults() {
  RunConfig cfg;
  cfg.plant = PlantParams::defaults();
  cfg.controller = ControllerParams::defaults();
  cfg.tuner = TunerParams::defaults();
  cfg.reference = ReferenceSpec::default_short();
  return cfg;
}

long RunConfig::tick_count() const {
  const double raw = reference.duration_s / dt_s;
  const double rounded = std::round(raw);
  if (!(rounded >= 1.0) ||
      std::fabs(raw - rounded) > 1e-6 * std::max(1.0, raw)) {
    throw ConfigError(
        "reference.duration_s: duration/dt_s must be an integer tick count");
  }
  return static_cast<long>(rounded);
}

void RunConfig::validate() const {
  check(dt_s > 0.0, "dt_s: must be > 0");
  check(smoothing_alpha > 0.0 && smoothing_alpha <= 1.0,
        "smoothing_alpha: must be in (0, 1]");
  check(identify_cycles >= 1, "identify_cycles: must be >= 1");
  check(move_threshold_deg > 0.0, "move_threshold_deg: must be > 0");

  check(plant.p_max_kpa > plant.p_min_kpa,
        "plant.p_max_kpa: must be > plant.p_min_kpa");
  check(plant.valve_gain > 0.0, "plant.valve_gain: must be > 0");
  check(plant.valve_neutral_v >= 0.0 && plant.valve_neutral_v <= 10.0,
        "plant.valve_neutral_v: must be in [0, 10]");
  check(plant.linear_gain >= 0.0, "plant.linear_gain: must be >= 0");
  check(plant.shape_curvature >= 0.0 && plant.shape_curvature < 1.0,
        "plant.shape_curvature: must be in [0, 1)");
  check(plant.lag_tau_s >= dt_s, "plant.lag_tau_s: must be >= dt_s");
  check(plant.noise_sigma_deg >= 0.0, "plant.noise_sigma_deg: must be >= 0");
  check(plant.quantization_deg >= 0.0,
        "plant.quantization_deg: must be >= 0");
  check(!plant.bank.empty(), "plant.play_ops: bank must not be empty");
  for (const PlayOperator& op : plant.bank) {
    check(op.r_load >= 0.0, "plant.play_ops: r_load must be >= 0");
    check(op.r_unload >= op.r_load,
          "plant.play_ops: r_unload must be >= r_load");
    check(op.weight >= 0.0, "plant.play_ops: weights must be >= 0");
  }

  const PidGains* loops[] = {&controller.outer, &controller.inner};
  const char* names[] = {"controller.outer", "controller.inner"};
  for (int i = 0; i < 2; ++i) {
    if (!(loops[i]->kp >= 0.0 && loops[i]->ki >= 0.0 && loops[i]->kd >= 0.0)) {
      throw ConfigError(std::string(names[i]) + "_*: gains must be >= 0");
    }
  }
  check(controller.kff0 >= 0.0, "controller.kff0: must be >= 0");
  check(controller.outer.kp > 0.0, "controller.outer_kp: must be > 0");

  const BranchParams* branches[] = {&tuner.fb.neg_accel, &tuner.fb.pos_accel,
                                    &tuner.ff.neg_accel, &tuner.ff.pos_accel};
  const char* bnames[] = {"tuner.fb_*_neg", "tuner.fb_*_pos",
                          "tuner.ff_*_neg", "tuner.ff_*_pos"};
  for (int i = 0; i < 4; ++i) {
    if (!(branches[i]->m > 0.0 && branches[i]->b > 0.0 &&
          branches[i]->c > 0.0)) {
      throw ConfigError(std::string(bnames[i]) +
                        ": M, b, c must all be > 0");
    }
  }
  check(tuner.theta_max_deg > 0.0, "tuner.theta_max_deg: must be > 0");
  check(tuner.kappa >= 0.0, "tuner.kappa: must be >= 0");
  check(tuner.lambda >= 0.0, "tuner.lambda: must be >= 0");
  check(tuner.mu >= 0.0, "tuner.mu: must be >= 0");

  check(reference.duration_s > 0.0, "reference.duration_s: must be > 0");
  for (const SineTerm& term : reference.terms) {
    check(term.frequency_hz >= 0.0, "reference.terms: frequency must be >= 0");
  }
  if (reference.kind == ReferenceKind::kTriangularPressure) {
    check(reference.lower_bound() >= plant.p_min_kpa &&
              reference.upper_bound() <= plant.p_max_kpa,
          "reference: triangular_pressure must stay within "
          "[plant.p_min_kpa, plant.p_max_kpa]");
  } else {
    check(reference.lower_bound() >= 0.0 &&
              reference.upper_bound() <= tuner.theta_max_deg,
          "reference: bending trajectory must stay within "
          "[0, tuner.theta_max_deg]");
  }
  (void)tick_count();
}

void apply_key(RunConfig& cfg, const std::string& key,
               const std::string& value) {
  // Globals.
  if (key == "dt_s") { cfg.dt_s = parse_double(key, value); return; }
  if (key == "seed") { cfg.seed = parse_u64(key, value); return; }
  if (key == "smoothing_alpha") {
    cfg.smoothing_alpha = parse_double(key, value);
    return;
  }
  if (key == "identify_cycles") {
    cfg.identify_cycles = static_cast<int>(parse_long(key, value));
    return;
  }
  if (key == "move_threshold_deg") {
    cfg.move_threshold_deg = parse_double(key, value);
    return;
  }
  if (key == "out_dir") { cfg.out_dir = value; return; }

  // Plant.
  PlantParams& pl = cfg.plant;
  if (key == "plant.p_min_kpa") { pl.p_min_kpa = parse_double(key, value); return; }
  if (key == "plant.p_max_kpa") { pl.p_max_kpa = parse_double(key, value); return; }
  if (key == "plant.valve_gain") { pl.valve_gain = parse_double(key, value); return; }
  if (key == "plant.valve_neutral_v") { pl.valve_neutral_v = parse_double(key, value); return; }
  if (key == "plant.linear_gain") { pl.linear_gain = parse_double(key, value); return; }
  if (key == "plant.shape_curvature") { pl.shape_curvature = parse_double(key, value); return; }
  if (key == "plant.lag_tau_s") { pl.lag_tau_s = parse_double(key, value); return; }
  if (key == "plant.noise_sigma_deg") { pl.noise_sigma_deg = parse_double(key, value); return; }
  if (key == "plant.quantization_deg") { pl.quantization_deg = parse_double(key, value); return; }
  if (key == "plant.play_ops") {
    pl.bank.clear();
    for (const auto& row : parse_tuple_list(key, value, 3)) {
      pl.bank.push_back({row[0], row[1], row[2]});
    }
    return;
  }

  // Controller.
  ControllerParams& ct = cfg.controller;
  if (key == "controller.outer_kp") { ct.outer.kp = parse_double(key, value); return; }
  if (key == "controller.outer_ki") { ct.outer.ki = parse_double(key, value); return; }
  if (key == "controller.outer_kd") { ct.outer.kd = parse_double(key, value); return; }
  if (key == "controller.inner_kp") { ct.inner.kp = parse_double(key, value); return; }
  if (key == "controller.inner_ki") { ct.inner.ki = parse_double(key, value); return; }
  if (key == "controller.inner_kd") { ct.inner.kd = parse_double(key, value); return; }
  if (key == "controller.kff0") { ct.kff0 = parse_double(key, value); return; }
  if (key == "controller.outer_law") {
    if (value == "increment") {
      ct.outer_law = OuterLaw::kIncrement;
    } else if (value == "velocity") {
      ct.outer_law = OuterLaw::kVelocity;
    } else {
      throw ConfigError(key + ": expected increment|velocity");
    }
    return;
  }

  // Tuner. Unified keys set both acceleration branches; _neg/_pos override
  // one branch (keys are applied in file order).
  TunerParams& tn = cfg.tuner;
  if (key == "tuner.mode") {
    TunerMode mode;
    if (!tuner_mode_from_name(value.c_str(), &mode)) {
      throw ConfigError(
          key + ": expected pid|ff_static|ff_adaptive|fb_adaptive|two_dof");
    }
    tn.mode = mode;
    return;
  }
  if (key == "tuner.theta_max_deg") { tn.theta_max_deg = parse_double(key, value); return; }
  if (key == "tuner.kappa") { tn.kappa = parse_double(key, value); return; }
  if (key == "tuner.lambda") { tn.lambda = parse_double(key, value); return; }
  if (key == "tuner.mu") { tn.mu = parse_double(key, value); return; }
  if (key == "tuner.literal_natural_decrease") {
    tn.literal_natural_decrease = parse_bool(key, value);
    return;
  }
  struct BranchKey {
    const char* name;
    ChannelParams* channel;
    void (*setter)(ChannelParams&, double, int);
    int which;  // 0 = both, 1 = neg branch, 2 = pos branch
  };
  const BranchKey branch_keys[] = {
      {"tuner.fb_m", &tn.fb, set_branch_m, 0},
      {"tuner.fb_b", &tn.fb, set_branch_b, 0},
      {"tuner.fb_c", &tn.fb, set_branch_c, 0},
      {"tuner.ff_m", &tn.ff, set_branch_m, 0},
      {"tuner.ff_b", &tn.ff, set_branch_b, 0},
      {"tuner.ff_c", &tn.ff, set_branch_c, 0},
      {"tuner.fb_m_neg", &tn.fb, set_branch_m, 1},
      {"tuner.fb_b_neg", &tn.fb, set_branch_b, 1},
      {"tuner.fb_c_neg", &tn.fb, set_branch_c, 1},
      {"tuner.fb_m_pos", &tn.fb, set_branch_m, 2},
      {"tuner.fb_b_pos", &tn.fb, set_branch_b, 2},
      {"tuner.fb_c_pos", &tn.fb, set_branch_c, 2},
      {"tuner.ff_m_neg", &tn.ff, set_branch_m, 1},
      {"tuner.ff_b_neg", &tn.ff, set_branch_b, 1},
      {"tuner.ff_c_neg", &tn.ff, set_branch_c, 1},
      {"tuner.ff_m_pos", &tn.ff, set_branch_m, 2},
      {"tuner.ff_b_pos", &tn.ff, set_branch_b, 2},
      {"tuner.ff_c_pos", &tn.ff, set_branch_c, 2},
  };
  for (const BranchKey& bk : branch_keys) {
    if (key == bk.name) {
      bk.setter(*bk.channel, parse_double(key, value), bk.which);
      return;
    }
  }

  // Reference.
  ReferenceSpec& ref = cfg.reference;
  if (key == "reference.kind") {
    if (value == "multi_sine") {
      ref.kind = ReferenceKind::kMultiSine;
    } else if (value == "piecewise_sine") {
      ref.kind = ReferenceKind::kPiecewiseSine;
    } else if (value == "triangular_pressure") {
      ref.kind = ReferenceKind::kTriangularPressure;
    } else {
      throw ConfigError(
          key + ": expected multi_sine|piecewise_sine|triangular_pressure");
    }
    return;
  }
  if (key == "reference.duration_s") { ref.duration_s = parse_double(key, value); return; }
  if (key == "reference.offset") { ref.offset = parse_double(key, value); return; }
  if (key == "reference.seed") { ref.seed = parse_u64(key, value); return; }
  if (key == "reference.terms") {
    ref.terms.clear();
    for (const auto& row : parse_tuple_list(key, value, 3)) {
      ref.terms.push_back({row[0], row[1], row[2]});
    }
    return;
  }

  throw ConfigError("unknown config key: '" + key + "'");
}

RunConfig parse_config(std::istream& in) {
  RunConfig cfg = RunConfig::defaults();
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(line_no) +
                        ": expected 'key = value'");
    }
    apply_key(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  cfg.validate();
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open config file: " + path);
  }
  return parse_config(in);
}

std::string dump_config(const RunConfig& cfg) {
  std::ostringstream out;
  out << "dt_s = " << fmt_full(cfg.dt_s) << "\n";
  out << "seed = " << cfg.seed << "\n";
  out << "smoothing_alpha = " << fmt_full(cfg.smoothing_alpha) << "\n";
  out << "identify_cycles = " << cfg.identify_cycles << "\n";
  out << "move_threshold_deg = " << fmt_full(cfg.move_threshold_deg) << "\n";
  out << "out_dir = " << cfg.out_dir << "\n";
  out << "\n";
  const PlantParams& pl = cfg.plant;
  out << "plant.p_min_kpa = " << fmt_full(pl.p_min_kpa) << "\n";
  out << "plant.p_max_kpa = " << fmt_full(pl.p_max_kpa) << "\n";
  out << "plant.valve_gain = " << fmt_full(pl.valve_gain) << "\n";
  out << "plant.valve_neutral_v = " << fmt_full(pl.valve_neutral_v) << "\n";
  out << "plant.linear_gain = " << fmt_full(pl.linear_gain) << "\n";
  out << "plant.shape_curvature = " << fmt_full(pl.shape_curvature) << "\n";
  out << "plant.lag_tau_s = " << fmt_full(pl.lag_tau_s) << "\n";
  out << "plant.noise_sigma_deg = " << fmt_full(pl.noise_sigma_deg) << "\n";
  out << "plant.quantization_deg = " << fmt_full(pl.quantization_deg) << "\n";
  out << "plant.play_ops = ";
  for (std::size_t j = 0; j < pl.bank.size(); ++j) {
    if (j) out << "; ";
    out << fmt_full(pl.bank[j].weight) << ", " << fmt_full(pl.bank[j].r_load)
        << ", " << fmt_full(pl.bank[j].r_unload);
  }
  out << "\n\n";
  const ControllerParams& ct = cfg.controller;
  out << "controller.outer_kp = " << fmt_full(ct.outer.kp) << "\n";
  out << "controller.outer_ki = " << fmt_full(ct.outer.ki) << "\n";
  out << "controller.outer_kd = " << fmt_full(ct.outer.kd) << "\n";
  out << "controller.inner_kp = " << fmt_full(ct.inner.kp) << "\n";
  out << "controller.inner_ki = " << fmt_full(ct.inner.ki) << "\n";
  out << "controller.inner_kd = " << fmt_full(ct.inner.kd) << "\n";
  out << "controller.kff0 = " << fmt_full(ct.kff0) << "\n";
  out << "controller.outer_law = "
      << (ct.outer_law == OuterLaw::kIncrement ? "increment" : "velocity")
      << "\n\n";
  const TunerParams& tn = cfg.tuner;
  out << "tuner.mode = " << tuner_mode_name(tn.mode) << "\n";
  out << "tuner.theta_max_deg = " << fmt_full(tn.theta_max_deg) << "\n";
  out << "tuner.kappa = " << fmt_full(tn.kappa) << "\n";
  out << "tuner.lambda = " << fmt_full(tn.lambda) << "\n";
  out << "tuner.mu = " << fmt_full(tn.mu) << "\n";
  out << "tuner.literal_natural_decrease = "
      << (tn.literal_natural_decrease ? "true" : "false") << "\n";
  out << "tuner.fb_m_neg = " << fmt_full(tn.fb.neg_accel.m) << "\n";
  out << "tuner.fb_b_neg = " << fmt_full(tn.fb.neg_accel.b) << "\n";
  out << "tuner.fb_c_neg = " << fmt_full(tn.fb.neg_accel.c) << "\n";
  out << "tuner.fb_m_pos = " << fmt_full(tn.fb.pos_accel.m) << "\n";
  out << "tuner.fb_b_pos = " << fmt_full(tn.fb.pos_accel.b) << "\n";
  out << "tuner.fb_c_pos = " << fmt_full(tn.fb.pos_accel.c) << "\n";
  out << "tuner.ff_m_neg = " << fmt_full(tn.ff.neg_accel.m) << "\n";
  out << "tuner.ff_b_neg = " << fmt_full(tn.ff.neg_accel.b) << "\n";
  out << "tuner.ff_c_neg = " << fmt_full(tn.ff.neg_accel.c) << "\n";
  out << "tuner.ff_m_pos = " << fmt_full(tn.ff.pos_accel.m) << "\n";
  out << "tuner.ff_b_pos = " << fmt_full(tn.ff.pos_accel.b) << "\n";
  out << "tuner.ff_c_pos = " << fmt_full(tn.ff.pos_accel.c) << "\n\n";
  const ReferenceSpec& ref = cfg.reference;
  out << "reference.kind = ";
  switch (ref.kind) {
    case ReferenceKind::kMultiSine: out << "multi_sine"; break;
    case ReferenceKind::kPiecewiseSine: out << "piecewise_sine"; break;
    case ReferenceKind::kTriangularPressure: out << "triangular_pressure"; break;
  }
  out << "\n";
  out << "reference.duration_s = " << fmt_full(ref.duration_s) << "\n";
  out << "reference.offset = " << fmt_full(ref.offset) << "\n";
  out << "reference.seed = " << ref.seed << "\n";
  out << "reference.terms = ";
  for (std::size_t i = 0; i < ref.terms.size(); ++i) {
    if (i) out << "; ";
    out << fmt_full(ref.terms[i].amplitude) << ", "
        << fmt_full(ref.terms[i].frequency_hz) << ", "
        << fmt_full(ref.terms[i].phase_rad);
  }
  out << "\n";
  return out.str();
}

}  // namespace pneusim
