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

#include <vector>

#include "hypcap/core.hpp"

namespace hypcap {

// (sum |f_i|^p)^(1/p), p in [1, 16].
double lp_norm(const std::vector<double>& f, double p);

// Least C with #{|f| > lambda} <= C^p / lambda^p for all lambda > 0.
// Exact for finite support: max over k of k^(1/p) * a_k with a sorted
// descending by absolute value.
double weak_lp_norm(const std::vector<double>& f, double p);

// Definitional evaluation on a lambda grid through the value levels.
// Independent of the sorted formula; used as its oracle.
double weak_lp_norm_by_levels(const std::vector<double>& f, double p);

struct MultiplicityTransferReport {
  int max_row_multiplicity = 0;  // max |J_h|
  int max_col_multiplicity = 0;  // max #{h : k in J_h}
  double s_norm = 0.0;
  double t_norm = 0.0;
  double ratio = 0.0;
  double ceiling = 0.0;
  bool pass = false;
};

// Verifies |s_h| <= sum_{k in J_h} |t_k| and compares the weak-norm ratio
// against a ceiling (default N^(1 + 1/p) with N the measured multiplicity).
MultiplicityTransferReport check_bounded_multiplicity_transfer(
    const std::vector<double>& s_vals, const std::vector<double>& t_vals,
    const std::vector<std::vector<int>>& relation, double p, double ceiling = 0.0);

}  // namespace hypcap
