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
#include "hypcap/metric_space.hpp"

using namespace hypcap;

static int failures = 0;

static void check(bool ok, const char* what) {
  std::printf("%s %s\n", ok ? "ok  " : "FAIL", what);
  if (!ok) ++failures;
}

static double brute_diameter(const MetricSpace& sp, const std::vector<int>& ids) {
  double d = 0.0;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      d = std::max(d, sp.dist(ids[i], ids[j]));
    }
  }
  return d;
}

int main() {
  // Line with eleven points 1/8 apart; the metric is the literal |x - y| and
  // every greedy comparison below is exact in binary.
  std::vector<double> xs;
  for (int i = 0; i <= 10; ++i) xs.push_back(0.125 * i);
  const MetricSpace line = build_line(xs);
  check(std::abs(line.diameter - 1.25) < 1e-15, "line diameter is 1.25");
  check(std::abs(line.mesh - 0.125) < 1e-15, "line mesh is 0.125");

  std::vector<int> order;
  for (int i = 0; i < 11; ++i) order.push_back(i);
  const SeparatedNet net = maximal_separated_net(line, 0.375, order);
  check(net.members == std::vector<int>({0, 3, 6, 9}), "greedy three-step net keeps every third point");
  check(is_separated(line, net.members, 0.375), "net members are three steps apart");
  check(covers_all(line, net.members, 0.375), "net members cover the line");
  check(!is_separated(line, {0, 1}, 0.375), "adjacent points fail the separation oracle");
  check(!covers_all(line, {0}, 0.375), "a single end point fails the covering oracle");

  // Square grid: rescaled diameter is exactly 1/2 and the mesh follows the
  // grid step under the same scale.
  const MetricSpace sq = build_square(13);
  check(std::abs(sq.diameter - 0.5) < 1e-12, "square diameter rescales to 1/2");
  const double step = sq.scale * (1.0 / 12.0);
  check(std::abs(sq.mesh - step) < 1e-12, "square mesh equals one scaled grid step");
  check(std::abs(sq.total_mass() - 1.0) < 1e-12, "square carries unit total mass");

  // Subset diameter agrees with the all-pairs scan, including past the
  // convex-hull cutoff.
  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 6; ++rep) {
    const int want = rep < 3 ? 12 : 90;
    std::vector<int> ids;
    std::uniform_int_distribution<int> pick(0, static_cast<int>(sq.size()) - 1);
    while (static_cast<int>(ids.size()) < want) ids.push_back(pick(rng));
    const double fast = subset_diameter(sq, ids);
    const double slow = brute_diameter(sq, ids);
    check(std::abs(fast - slow) < 1e-12, "subset diameter matches the all-pairs scan");
  }

  // Snowflaked metric: diameters of subsets stay exact under the monotone map.
  MetricSpace snow = sq;
  snow.alpha = 0.7;
  snow.scale = 0.5 / std::pow(std::sqrt(2.0), 0.7);
  finalize_space(snow, /*rescale_to_half=*/false);
  for (int rep = 0; rep < 3; ++rep) {
    std::vector<int> ids;
    std::uniform_int_distribution<int> pick(0, static_cast<int>(snow.size()) - 1);
    while (static_cast<int>(ids.size()) < 60) ids.push_back(pick(rng));
    const double fast = subset_diameter(snow, ids);
    const double slow = brute_diameter(snow, ids);
    check(std::abs(fast - slow) < 1e-12, "snowflake subset diameter matches the scan");
  }

  // Ball helpers against a direct distance filter.
  for (int c : {0, 17, 84}) {
    const double r = 0.12;
    const std::vector<int> got = ball_points(sq, c, r);
    std::vector<int> want;
    double mass = 0.0;
    for (int i = 0; i < static_cast<int>(sq.size()); ++i) {
      if (sq.dist(c, i) <= r + kBallSlack) {
        want.push_back(i);
        mass += sq.weight[i];
      }
    }
    check(got == want, "ball_points matches the distance filter");
    check(std::abs(ball_mass(sq, c, r) - mass) < 1e-15, "ball_mass matches the filtered sum");
  }

  // Regularity envelope: bounds are ordered, positive, and bracket the
  // mu(B)/r^Q samples by construction.
  const RegularityEstimate reg = regularity_constants(sq, 2, 12);
  check(reg.samples > 0, "regularity scan sampled at least one ball");
  check(reg.c_Q > 0.0 && reg.c_Q <= reg.C_Q, "regularity constants are ordered");
  check(reg.r_min >= 3.0 * sq.mesh - 1e-15 && reg.r_min < reg.r_max,
        "regularity radius ladder starts above 3 x mesh");

  // Rectangle weights: every point carries one scaled cell area.
  const MetricSpace rect = build_rectangle(9, 5, 2.0, 1.0);
  const double cell = (2.0 / 8.0) * (1.0 / 4.0) * rect.scale * rect.scale;
  bool cells_ok = true;
  for (double w : rect.weight) cells_ok = cells_ok && std::abs(w - cell) < 1e-15;
  check(cells_ok, "rectangle weights are one scaled grid cell each");
  check(std::abs(rect.total_mass() - 45.0 * cell) < 1e-12,
        "rectangle mass is the cell count times the cell area");

  // Carpet: the level-1 construction keeps 8 cells, deeper levels 8^depth.
  const MetricSpace carp = build_carpet(2);
  check(carp.size() == 64, "depth-2 carpet has 64 cell centers");
  check(std::abs(carp.Q - std::log(8.0) / std::log(3.0)) < 1e-12,
        "carpet regularity exponent is log 8 / log 3");

  std::printf(failures == 0 ? "PASS test_metric_space\n" : "FAIL test_metric_space (%d)\n",
              failures);
  return failures == 0 ? 0 : 1;
}
