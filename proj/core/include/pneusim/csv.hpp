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

#ifndef PNEUSIM_CSV_HPP_
#define PNEUSIM_CSV_HPP_

#include <string>
#include <vector>

#include "pneusim/harness.hpp"

namespace pneusim {

// Fixed header rows; emitted and asserted byte-exactly.
inline constexpr char kTraceHeader[] =
    "t_s,theta_ref_deg,theta_meas_deg,error_deg,p_ref_kpa,p_meas_kpa,u_v,"
    "kp_gain,kff_gain";
inline constexpr char kMetricsHeader[] =
    "method,e_max_deg,e_min_deg,abs_e_ave_pct,rmse_deg,var_deg2";
inline constexpr char kLoopHeader[] = "p_kpa,theta_deg";

/// Formats a double with 9 significant digits (the trace/metrics contract).
std::string format_value(double v);

void write_trace(const EpisodeTrace& trace, const std::string& path);
void write_metrics(const std::vector<ComparisonRow>& rows,
                   const std::string& path);
void write_loop(const HysteresisLoop& loop, const std::string& path);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// Reads back any file this tool emits. Throws std::runtime_error on I/O
/// failure or ragged rows.
CsvTable read_csv(const std::string& path);

}  // namespace pneusim

#endif  // PNEUSIM_CSV_HPP_
