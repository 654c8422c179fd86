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

#include "hypcap/capacity.hpp"
#include "hypcap/filling.hpp"
#include "hypcap/path_solver.hpp"

namespace hypcap {

// Discrete curve universe for the boundary space: points linked within
// link_radius, each link carrying its metric length.
struct NeighborGraph {
  const MetricSpace* space = nullptr;
  EdgeGraph g;
  std::vector<double> length;  // per edge
  double link_radius = 0.0;
};

// link_radius <= 0 selects the default 2 x mesh, which keeps grid spaces
// connected.
NeighborGraph build_neighbor_graph(const MetricSpace& sp, double link_radius = 0.0);

// Discrete line integral: trapezoidal density sum along a node path.
double trapezoid_length(const NeighborGraph& ng, const std::vector<double>& rho,
                        const std::vector<int>& nodes);

// Shortest trapezoid rho-length over paths joining the masks, with the
// minimizing path expressed as a linear constraint (node coefficients are the
// incident half-lengths).
std::pair<double, PathConstraint> crossing_oracle(const NeighborGraph& ng,
                                                  const std::vector<double>& rho,
                                                  const std::vector<int>& sources,
                                                  const std::vector<char>& targets);

// Classical discrete p-modulus of the family of neighbor paths joining A and
// B. lp_value carries the modulus sum_x weight(x) rho(x)^p; tau carries the
// density certificate (per point); weak_value mirrors lp_value.
CapacityReport modulus(const MetricSpace& sp, const std::vector<char>& A,
                       const std::vector<char>& B, double p, const SolveConfig& cfg,
                       const NeighborGraph* prebuilt = nullptr);

// f(v) = sum of tau over edges incident to v, in graph_from_filling order.
std::vector<double> edge_to_vertex_sum(const std::vector<double>& tau_edge, const Filling& f);

// u_n(x) = sum over level-n vertices with x in 2B_v of f(v)/r(B_v).
std::vector<double> project_to_un(const std::vector<double>& fv, const Filling& f, int n);

// tau(e) = r(e+) (avg_{K B(e+)} rho^p)^{1/p} + r(e-) (avg_{K B(e-)} rho^p)^{1/p}
// with weighted point averages; K r is clamped to the space diameter and
// *clamped counts how many vertices hit the clamp. Requires 1 < p < Q.
std::vector<double> lift_to_tau(const std::vector<double>& rho, const Filling& f, double p,
                                double K, int* clamped = nullptr);

}  // namespace hypcap
