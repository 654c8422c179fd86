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

#include "hypcap/capacity.hpp"
#include "hypcap/filling.hpp"
#include "hypcap/path_solver.hpp"

namespace hypcap {

// Rectifiable curve sampled on space points, parameterized by arclength.
struct SampledCurve {
  std::vector<int> samples;
  std::vector<double> cum_length;  // cum_length[0] = 0, nondecreasing
  double total_length = 0.0;
  double sample_mesh = 0.0;  // max consecutive sample distance
};

SampledCurve make_curve(const MetricSpace& sp, const std::vector<int>& point_ids);

// Halves large gaps by inserting the space point nearest each midpoint while
// that shrinks the gap; curves whose gaps cannot shrink are returned as-is.
SampledCurve densify_curve(const MetricSpace& sp, const SampledCurve& c, double target_mesh);

// Vertex subset whose balls jointly contain every space point.
struct Cover {
  std::vector<int> vertices;  // sorted vertex ids
  std::string label;          // "level" or "band"
  int param = 0;              // n, or j for levels [j, 2j]
};

std::vector<Cover> level_covers(const Filling& f, const std::vector<int>& n_list);
Cover band_cover(const Filling& f, int j);
// Point-sweep oracle.
bool cover_covers_space(const Filling& f, const Cover& c);

// Consecutive sample blocks assigned to cover balls. Block k spans sample
// indices (breakpoints[k], breakpoints[k+1]] with breakpoints[0] = -1 by
// convention mapped to 0; every sample of a block lies in the block's ball
// shrunk by the curve's sample mesh.
struct Projection {
  std::vector<int> breakpoints;  // size balls.size() + 1; first = 0, last = n-1
  std::vector<int> balls;        // vertex ids, one per block
};

// Exact minimum of sum tau(ball) over projections of the curve onto the
// cover. Blocks use the farthest-reach transition, which cannot miss the
// optimum because costs are nonnegative.
std::pair<double, Projection> min_projection_length(const Filling& f, const SampledCurve& c,
                                                    const Cover& cover,
                                                    const std::vector<double>& tau_vertex);

// Enumeration oracle without the farthest-reach shortcut; exponential, for
// short curves in tests.
double min_projection_exhaustive(const Filling& f, const SampledCurve& c, const Cover& cover,
                                 const std::vector<double>& tau_vertex);

// Finite stand-in for the tail condition: all values >= 1 - tol from the
// first index where two consecutive covers pass.
bool is_admissible_covering(const Filling& f, const std::vector<double>& tau_vertex,
                            const SampledCurve& c, const std::vector<Cover>& covers, double tol);

// The canonical tested families: levels 1..max_level and bands 1..max_level/2.
std::vector<Cover> canonical_level_family(const Filling& f);
std::vector<Cover> canonical_band_family(const Filling& f);

// v -> r(B_v) * eps.
std::vector<double> tau_epsilon(const Filling& f, double eps);

// Constraint-generated upper bound for the covering capacity of the curve
// family: every (curve, cover) pair over both canonical families must admit
// projection cost >= 1. The certificate is vertex-supported.
CapacityReport wccap_upper(const Filling& f, const std::vector<SampledCurve>& curves, double p,
                           const SolveConfig& cfg);

// Boundary density sigma_n(x) = 2 sum_{v in V_n, x in 2B_v} tau(v)/r(B_v).
std::vector<double> sigma_n_projection(const std::vector<double>& tau_vertex, const Filling& f,
                                       int n);

// Vertex lift of a boundary density: tau(v) = r(B_v) (avg_{K B_v} rho^p)^{1/p}
// with weighted ball averages; the covering-side analogue of the edge lift.
std::vector<double> lift_density_to_vertices(const std::vector<double>& rho, const Filling& f,
                                             double p, double K);

}  // namespace hypcap
