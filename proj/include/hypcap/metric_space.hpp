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

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "hypcap/core.hpp"

namespace hypcap {

// Finite metric measure space. Points carry raw coordinates; the metric is
// scale * ||x - y||^alpha, which keeps subset diameters computable exactly
// from the Euclidean geometry (the map is monotone).
struct MetricSpace {
  std::string name;
  int dim = 2;
  std::vector<double> x;
  std::vector<double> y;  // unused when dim == 1
  std::vector<double> weight;
  double scale = 1.0;
  double alpha = 1.0;
  double Q = 2.0;
  double mesh = 0.0;      // min positive pairwise distance, metric units
  double diameter = 0.0;  // metric units

  std::size_t size() const { return x.size(); }

  double euclid(int i, int j) const {
    const double dx = x[i] - x[j];
    if (dim == 1) return std::abs(dx);
    const double dy = y[i] - y[j];
    return std::sqrt(dx * dx + dy * dy);
  }

  double metric_of(double eu) const {
    if (alpha == 1.0) return scale * eu;
    return scale * std::pow(eu, alpha);
  }

  double dist(int i, int j) const { return metric_of(euclid(i, j)); }

  double total_mass() const;
};

// Generators. All rescale the metric so the diameter is exactly 1/2 and use
// normalized counting measure unless noted.

// grid_n x grid_n uniform grid on the unit square, Q = 2.
MetricSpace build_square(int grid_n);

// Centers of the retained cells after `depth` rounds of the 3x3 subdivision
// that drops the middle cell. Q = log 8 / log 3. depth in [1, 6].
MetricSpace build_carpet(int depth);

// nx x ny grid on a width x height rectangle. Per-point weights equal the
// cell area in rescaled-metric units, so p = 2 modulus values match the
// continuum rectangle irrespective of the rescale.
MetricSpace build_rectangle(int nx, int ny, double width, double height);

// 1-D point list with the metric |x - y| (no rescale, no weights logic
// beyond normalized counting). Used for small exact tests.
MetricSpace build_line(const std::vector<double>& xs);

// Computes mesh/diameter by brute force and rescales to diameter 1/2.
void finalize_space(MetricSpace& sp, bool rescale_to_half = true);

// Exact diameter of a point subset (monotone metric => reduces to the
// Euclidean extremes; convex hull + rotating calipers above a size cutoff).
double subset_diameter(const MetricSpace& sp, const std::vector<int>& ids);

struct SeparatedNet {
  double delta = 0.0;
  std::vector<int> members;  // insertion order of the greedy pass
};

// Greedy maximal delta-separated subset, scanning `order`. Members are
// pairwise >= delta apart; every point is within delta of some member.
SeparatedNet maximal_separated_net(const MetricSpace& sp, double delta,
                                   const std::vector<int>& order);

// Brute-force checks used as oracles in tests.
bool is_separated(const MetricSpace& sp, const std::vector<int>& members, double delta);
bool covers_all(const MetricSpace& sp, const std::vector<int>& members, double delta);

struct RegularityEstimate {
  double c_Q = 0.0;
  double C_Q = 0.0;
  double r_min = 0.0;
  double r_max = 0.0;
  long long samples = 0;
};

// Empirical bounds on mu(B(z, r)) / r^Q over sampled centers and a geometric
// radius ladder. Radii below 3 x mesh are excluded.
RegularityEstimate regularity_constants(const MetricSpace& sp, int center_stride = 1,
                                        int radius_steps = 16);

// Point ids within metric distance <= r (+ slack) of center c.
std::vector<int> ball_points(const MetricSpace& sp, int c, double r);

double ball_mass(const MetricSpace& sp, int c, double r);

}  // namespace hypcap
