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

#include <string>
#include <vector>

#include "json.hpp"

#include "hypcap/core.hpp"

namespace hypcap {

using Json = nlohmann::json;

// Schema tag written as the first line of every summary CSV. Readers reject
// files with a different tag so stale reports are never silently compared.
inline constexpr const char* kSummarySchema = "hypcap-summary-v1";

struct SummaryRow {
  std::string scenario;
  std::string space;
  double s = 0.0;
  int depth = 0;
  double p = 0.0;
  std::string mode;  // "wcap", "wccap", "modulus", "witness", ...
  double lp_value = 0.0;
  double weak_value = 0.0;
  double witness_value = 0.0;  // NaN when no witness was formed
  double lower_bound = 0.0;    // NaN when no bound applies
  std::string status = "ok";
};

// Shortest exact decimal form; "nan"/"inf" spelled out. Stable across runs.
std::string format_double(double v);

void write_summary_csv(const std::string& path,
                       const std::vector<SummaryRow>& rows);
std::vector<SummaryRow> read_summary_csv(const std::string& path);

void write_detail_json(const std::string& path, const Json& doc);
Json read_detail_json(const std::string& path);

// Certificates embedded in detail reports. `kind` names the admissibility
// oracle the values were solved against ("edge", "vertex", "density").
struct StoredCertificate {
  std::string kind;
  double p = 0.0;
  int depth = 0;
  std::vector<double> values;
};

Json certificate_to_json(const StoredCertificate& cert);
StoredCertificate certificate_from_json(const Json& j);

struct CompareRow {
  std::string key;  // scenario/space/depth/p/mode identifier
  double lp_a = 0.0;
  double lp_b = 0.0;
  double weak_a = 0.0;
  double weak_b = 0.0;
  double lp_ratio = 0.0;    // b over a
  double weak_ratio = 0.0;  // b over a
  bool flagged = false;
};

struct CompareReport {
  std::vector<CompareRow> rows;
  std::vector<std::string> only_a;  // keys present only in the first file
  std::vector<std::string> only_b;
  int flagged_count = 0;
};

// Aligns rows by (scenario, space, depth, p, mode) and flags value ratios
// outside [1/slack, slack].
CompareReport compare_summaries(const std::vector<SummaryRow>& a,
                                const std::vector<SummaryRow>& b, double slack);

std::string render_compare(const CompareReport& rep);

}  // namespace hypcap
