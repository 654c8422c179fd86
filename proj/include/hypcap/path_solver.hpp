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

#include <functional>
#include <limits>
#include <utility>
#include <vector>

#include "hypcap/core.hpp"
#include "hypcap/filling.hpp"

namespace hypcap {

struct EdgeGraph {
  int nodes = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<std::pair<int, int>>> inc;  // node -> (neighbor, edge id)

  int add_edge(int u, int v);
  int edge_count() const { return static_cast<int>(edges.size()); }
};

// Edge ids follow adjacency order with u < v, so they are deterministic.
EdgeGraph graph_from_filling(const Filling& f);

struct PathResult {
  double length = std::numeric_limits<double>::infinity();
  std::vector<int> nodes;
  std::vector<int> edge_ids;  // empty for node-supported paths
  bool found = false;
};

// Deterministic Dijkstra (priority on (dist, hops, id), min-id predecessor).
// Weights must be nonnegative. Returns the first settled target.
PathResult shortest_edge_path(const EdgeGraph& g, const std::vector<double>& tau,
                              const std::vector<int>& sources,
                              const std::vector<char>& is_target);

// Node-supported variant: a path pays the weight of every vertex on it,
// endpoints included.
PathResult shortest_node_path(const EdgeGraph& g, const std::vector<double>& node_cost,
                              const std::vector<int>& sources,
                              const std::vector<char>& is_target);

// One linear inequality sum_i coeff_i * tau[support_i] >= bound over the
// solve variables. Supports may repeat ids; coefficients default to 1.
struct PathConstraint {
  std::vector<int> support;
  std::vector<double> coeff;
  double bound = 1.0;

  double evaluate(const std::vector<double>& tau) const;
};

struct SolveConfig {
  double p = 2.0;
  double inner_tol = 1e-8;
  double outer_tol = 1e-6;
  int max_constraints = 10000;
  long long max_inner_iters = 400000;
};

// Most-violated-constraint oracle: returns (value, constraint) minimizing
// the admissibility value under the current weights.
using ViolationOracle =
    std::function<std::pair<double, PathConstraint>(const std::vector<double>& tau)>;

// Batch variant: the first entry must be the exact minimizer; later entries
// are optional diversification cuts, each strictly violated as well.
using MultiViolationOracle =
    std::function<std::vector<std::pair<double, PathConstraint>>(const std::vector<double>& tau)>;

struct SolveResult {
  std::vector<double> tau;
  double lp_value = 0.0;    // sum_i m_i tau_i^p
  double weak_value = 0.0;  // ||tau||_{p,inf}^p
  double duality_gap = 0.0; // certified optimality slack of the final restricted solve
  int constraints = 0;
  int oracle_calls = 0;
  bool feasible = false;
  std::vector<PathConstraint> generated;
};

// Constraint generation: start from tau = 0, repeatedly add the oracle's
// minimizing constraint and re-solve min sum m_i tau_i^p over the generated
// set until the oracle value reaches bound - outer_tol. Final tau is scaled
// to exact oracle feasibility.
SolveResult minimize_lp_subject_to_paths(int nvars, const std::vector<double>& obj_weight,
                                         const SolveConfig& cfg, const ViolationOracle& oracle);

// Same loop with a whole batch of cuts per round; one re-solve per batch.
SolveResult minimize_lp_subject_to_paths(int nvars, const std::vector<double>& obj_weight,
                                         const SolveConfig& cfg,
                                         const MultiViolationOracle& oracle);

// Wraps a single-cut path oracle into a peeled batch: after each found path,
// weights along it are bumped so the next search must take a different route;
// only cuts whose true value stays under bound - outer_tol are kept.
MultiViolationOracle peel_path_cuts(const ViolationOracle& oracle, int cuts, double outer_tol);

struct RestrictedSolution {
  std::vector<double> tau;
  std::vector<double> lambda;
  double primal = 0.0;
  double dual = 0.0;
  long long iters = 0;
};

// min sum_i m_i tau_i^p subject to the given constraints and tau >= 0,
// solved as projected gradient with backtracking on the concave dual
// (multipliers clamped at zero; primal recovered through the stationarity
// map). Weak duality makes primal - dual a certified optimality gap.
RestrictedSolution solve_restricted(int nvars, const std::vector<double>& obj_weight, double p,
                                    const std::vector<PathConstraint>& cons, double inner_tol,
                                    long long max_iters, std::vector<double> warm_lambda = {});

// Coordinate passes that lower single weights by their through-path slack,
// re-verifying with a fresh shortest path after each accepted move. Never
// raises the weak norm, never breaks admissibility. Returns accepted moves.
int weak_norm_polish_edges(const EdgeGraph& g, std::vector<double>& tau, double p,
                           const std::vector<int>& sources, const std::vector<char>& is_target,
                           double tol, int max_passes = 8);

// Framework-free polish for non-graph instances: clips the top weight level
// down while the oracle stays satisfied.
int weak_norm_polish_generic(std::vector<double>& tau, double p, const ViolationOracle& oracle,
                             double tol, int max_moves = 64);

}  // namespace hypcap
