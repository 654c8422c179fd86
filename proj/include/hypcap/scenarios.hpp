// Copyright 2026 The hypcap authors
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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hypcap/report.hpp"

namespace hypcap {

// Named end-to-end experiment presets. Each runs a fixed pipeline, decides
// pass/fail from pinned quantitative gates, and writes one summary CSV and
// one detail JSON under the output directory.
struct ScenarioOptions {
  int depth_override = -1;      // -1 keeps the preset depth list
  double p_override = 0.0;      // 0 keeps the preset exponent grid
  std::uint64_t seed = 12345;
  std::string out_dir;          // required; created if missing
};

struct ScenarioResult {
  std::string name;
  bool pass = false;
  std::vector<std::string> messages;  // one line per individual check
  std::vector<SummaryRow> summary;
  Json detail;
  std::string csv_path;
  std::string json_path;
};

std::vector<std::string> scenario_names();

// Unknown name: config_error. Pipeline failures are captured in the result
// (pass = false, message appended), not thrown.
ScenarioResult run_scenario(const std::string& name, const ScenarioOptions& opt);

}  // namespace hypcap
