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

#include "pneusim/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pneusim {
namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);  // '\n' line endings everywhere
  if (!out) {
    throw std::runtime_error("cannot open for writing: " + path);
  }
  return out;
}

}  // namespace

std::string format_value(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

void write_trace(const EpisodeTrace& trace, const std::string& path) {
  std::ofstream out = open_out(path);
  out << kTraceHeader << "\n";
  for (const TraceSample& s : trace.samples) {
    out << format_value(s.t_s) << ',' << format_value(s.theta_ref_deg) << ','
        << format_value(s.theta_meas_deg) << ',' << format_value(s.error_deg)
        << ',' << format_value(s.p_ref_kpa) << ','
        << format_value(s.p_meas_kpa) << ',' << format_value(s.u_v) << ','
        << format_value(s.kp_gain) << ',' << format_value(s.kff_gain) << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

void write_metrics(const std::vector<ComparisonRow>& rows,
                   const std::string& path) {
  std::ofstream out = open_out(path);
  out << kMetricsHeader << "\n";
  for (const ComparisonRow& row : rows) {
    out << tuner_mode_name(row.mode) << ','
        << format_value(row.metrics.e_max_deg) << ','
        << format_value(row.metrics.e_min_deg) << ','
        << format_value(row.metrics.abs_e_ave_pct) << ','
        << format_value(row.metrics.rmse_deg) << ','
        << format_value(row.metrics.var_deg2) << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

void write_loop(const HysteresisLoop& loop, const std::string& path) {
  std::ofstream out = open_out(path);
  out << kLoopHeader << "\n";
  for (const auto& [p, theta] : loop.points) {
    out << format_value(p) << ',' << format_value(theta) << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

CsvTable read_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open for reading: " + path);
  }
  CsvTable table;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (line.back() == ',') cells.emplace_back();
    if (first) {
      table.header = std::move(cells);
      first = false;
    } else {
      if (cells.size() != table.header.size()) {
        throw std::runtime_error("ragged CSV row in " + path);
      }
      table.rows.push_back(std::move(cells));
    }
  }
  return table;
}

}  // namespace pneusim
