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

#include <limits>
#include <map>
#include <string>
#include <vector>

#include "hypcap/filling.hpp"
#include "hypcap/path_solver.hpp"

namespace hypcap {

// Boundary pair for a capacity query. A and B are point-membership masks over
// the space. open mode requires dist(A, B) > 0; continuum mode requires
// disjoint neighbor-connected sets with more than one point.
struct CapacityQuery {
  std::vector<char> A;
  std::vector<char> B;
  AnchorMode mode = AnchorMode::open;
  double p = 2.0;
  int depth = 0;  // anchor level; must be <= filling max_level
};

struct CapacityReport {
  double p = 2.0;
  int depth = 0;
  double lp_value = 0.0;
  double weak_value = 0.0;  // reported upper bound: ||tau||_{p,inf}^p
  double witness_value = std::numeric_limits<double>::quiet_NaN();
  double lower_bound = std::numeric_limits<double>::quiet_NaN();
  double duality_gap = 0.0;
  int constraints = 0;
  int oracle_calls = 0;
  int polish_moves = 0;
  std::string status = "ok";
  std::vector<double> tau;  // edge certificate on graph_from_filling order
  std::vector<int> from_verts;
  std::vector<int> to_verts;
};

void validate_query(const MetricSpace& sp, const CapacityQuery& q);

double dist_between_sets(const MetricSpace& sp, const std::vector<char>& A,
                         const std::vector<char>& B);

// Minimal tau-length over edge paths joining the two anchor families,
// excluding the trivial same-vertex pairing when the families overlap.
// Returns the value and the minimizing path as a unit-bound constraint.
// Overlaps above 32 shared vertices are refused (pass count blowup).
std::pair<double, PathConstraint> anchor_connection(const EdgeGraph& g,
                                                    const std::vector<double>& tau,
                                                    const std::vector<int>& from_verts,
                                                    const std::vector<int>& to_verts);

// Finite-depth upper bound: constraint-generated l^p solve over edge weights
// with the anchor-connection oracle, weak-norm polish, and a final
// admissibility re-check. weak_value is the reported bound.
CapacityReport wcap_upper(const Filling& f, const CapacityQuery& q, const SolveConfig& cfg);

// Explicit certificate tau(e) = f(e+) + f(e-), f(v) = 4 r(B_v) / dist(A, B).
// Any anchor-to-anchor path with at least one edge has tau-length >= 2, so
// tau/2 is admissible; min_path records the oracle value of tau itself.
struct WitnessReport {
  std::vector<double> tau;
  double dist_ab = 0.0;
  double weak_value = 0.0;  // of tau/2, p-th power
  double lp_value = 0.0;
  double min_path = 0.0;    // oracle value of tau (admissible iff >= 2)
  bool admissible = false;
};

WitnessReport witness_certificate(const Filling& f, const CapacityQuery& q);

// Nested dyadic splitting: nodes[g] for binary strings g, nodes[""] = root;
// arcs[g] is the ascending vertex path of offset_m edges from nodes[parent]
// down to nodes[g]. Sibling containments hold and doubled sibling balls are
// disjoint as point sets.
struct BinaryStructure {
  int root = -1;
  int offset_m = 0;
  double k_inner = 0.0;  // annulus inner radius factor
  std::map<std::string, int> nodes;
  std::map<std::string, std::vector<int>> arcs;
};

// k from (3/4) (c_Q / C_Q)^{1/Q} with a 0.95 safety factor, M minimal with
// s^-M < k/16; children searched at level l(root) + M per generation.
BinaryStructure build_binary_structure(const Filling& f, int root, int gens,
                                       const RegularityEstimate& reg);

// Throws on any violated structure invariant.
void verify_binary_structure(const Filling& f, const BinaryStructure& bs);

// Average tau-length of the 2^gens root-to-leaf arc concatenations.
double binary_average_path_length(const BinaryStructure& bs, const EdgeGraph& g,
                                  const std::vector<double>& tau);

// Truncated series M + sum_{k>=2} M ((2^{k-1}-1) M)^{-1/p} plus its geometric
// tail bound; the result overestimates the limit by at most tail_tol.
double s_constant(double p, int M, double tail_tol = 1e-9);

// p-th power of 1 / (2 S(p) + L^{1-1/p} / (1-1/p)). p = 1 uses the log form
// 1 / (2 S(1) + 1 + log L) and is refused unless allow_p1 is set.
double positivity_lower_bound(double p, int L, int M, bool allow_p1 = false);

// Largest possible tau-length of an L-edge path with weak norm b:
// b L^{1-1/p} / (1-1/p), and b (1 + log L) at p = 1.
double line_weak_bound(double p, int L, double b);

struct QwRow {
  double p = 0.0;
  int depth = 0;
  double wcap_weak = 0.0;
  double wcap_lp = 0.0;
  double witness_weak = 0.0;
  double witness_min_path = 0.0;
  bool witness_admissible = false;
  double growth_ratio = 0.0;  // wcap_weak vs previous depth at the same p; 0 on first
};

// Depth/exponent sweep: one deep filling built once, truncations per depth,
// wcap_upper plus the explicit witness at each (p, depth).
std::vector<QwRow> qw_scan(const MetricSpace& sp, double s, int max_depth,
                           const std::vector<double>& p_grid,
                           const std::vector<int>& depth_grid, const CapacityQuery& q_template,
                           const SolveConfig& cfg);

}  // namespace hypcap
