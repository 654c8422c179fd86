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

#include <cassert>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "hypcap/core.hpp"
#include "hypcap/weak_norm.hpp"

using namespace hypcap;

static int failures = 0;

static void check(bool ok, const char* what) {
  std::printf("%s %s\n", ok ? "ok  " : "FAIL", what);
  if (!ok) ++failures;
}

int main() {
  // Hand-checked values. Sorted formula: max over k of k^(1/p) |a|_(k).
  const std::vector<double> v = {8.0, 4.0, 2.0, 1.0};
  check(std::abs(weak_lp_norm(v, 2.0) - 8.0) < 1e-15, "weak 2-norm of 8 4 2 1 is 8");
  check(std::abs(lp_norm(v, 2.0) - std::sqrt(85.0)) < 1e-15, "l2 norm of 8 4 2 1 is sqrt 85");
  check(std::abs(weak_lp_norm({3.0, 3.0, 3.0}, 1.0) - 9.0) < 1e-15,
        "weak 1-norm of three 3s is 9");
  check(weak_lp_norm({}, 2.0) == 0.0, "empty vector has zero weak norm");
  check(weak_lp_norm({0.0, 0.0}, 3.0) == 0.0, "all-zero vector has zero weak norm");
  check(std::abs(weak_lp_norm({-5.0, 1.0}, 2.0) - 5.0) < 1e-15, "signs are dropped");

  // The level-grid evaluation is an independent oracle for the sorted form.
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unif(0.0, 2.0);
  for (int rep = 0; rep < 300; ++rep) {
    const int n = 1 + static_cast<int>(rng() % 40);
    std::vector<double> f(n);
    for (double& t : f) {
      t = unif(rng);
      if (rng() % 7 == 0) t = std::round(4.0 * t) / 4.0;  // force ties
      if (rng() % 11 == 0) t = 0.0;
    }
    for (double p : {1.0, 1.7, 2.0, 3.3}) {
      const double a = weak_lp_norm(f, p);
      const double b = weak_lp_norm_by_levels(f, p);
      check(std::abs(a - b) <= 1e-10 * std::max(1.0, a),
            "sorted weak norm matches the level-grid evaluation");
      check(a <= lp_norm(f, p) + 1e-12, "weak norm never exceeds the strong norm");
    }
  }

  // Multiplicity transfer: s_h = sum of its targets, disjoint rows, so the
  // measured multiplicities are 2 and 1 and the bound must hold.
  const std::vector<double> t_vals = {4.0, 3.0, 2.0, 1.0};
  const std::vector<double> s_vals = {7.0, 3.0};
  const std::vector<std::vector<int>> relation = {{0, 1}, {2, 3}};
  MultiplicityTransferReport tr =
      check_bounded_multiplicity_transfer(s_vals, t_vals, relation, 2.0);
  check(tr.pass, "disjoint two-target transfer passes");
  check(tr.max_row_multiplicity == 2 && tr.max_col_multiplicity == 1,
        "transfer multiplicities are measured as 2 and 1");
  check(tr.ratio <= tr.ceiling + 1e-12, "transfer ratio sits under the ceiling");

  // Violating the pointwise domination must be rejected outright.
  bool threw = false;
  try {
    check_bounded_multiplicity_transfer({100.0}, {1.0, 1.0}, {{0, 1}}, 2.0);
  } catch (const precondition_error&) {
    threw = true;
  }
  check(threw, "a dominated-value violation is rejected");

  std::printf(failures == 0 ? "PASS test_weak_norm\n" : "FAIL test_weak_norm (%d)\n", failures);
  return failures == 0 ? 0 : 1;
}
