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

#include "hypcap/modulus.hpp"

#include <algorithm>
#include <cmath>

#include "hypcap/parallel.hpp"
#include "hypcap/weak_norm.hpp"

namespace hypcap {

NeighborGraph build_neighbor_graph(const MetricSpace& sp, double link_radius) {
  NeighborGraph ng;
  ng.space = &sp;
  ng.link_radius = link_radius > 0.0 ? link_radius : 2.0 * sp.mesh;
  const int n = static_cast<int>(sp.size());
  ng.g.nodes = n;
  ng.g.inc.resize(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double d = sp.dist(i, j);
      if (d > 0.0 && d <= ng.link_radius + kBallSlack) {
        ng.g.add_edge(i, j);
        ng.length.push_back(d);
      }
    }
  }
  return ng;
}

double trapezoid_length(const NeighborGraph& ng, const std::vector<double>& rho,
                        const std::vector<int>& nodes) {
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    int eid = -1;
    for (const auto& [w, e] : ng.g.inc[nodes[i]]) {
      if (w == nodes[i + 1]) {
        eid = e;
        break;
      }
    }
    if (eid < 0) throw precondition_error("trapezoid_length: nodes not linked");
    acc += 0.5 * (rho[nodes[i]] + rho[nodes[i + 1]]) * ng.length[eid];
  }
  return acc;
}

std::pair<double, PathConstraint> crossing_oracle(const NeighborGraph& ng,
                                                  const std::vector<double>& rho,
                                                  const std::vector<int>& sources,
                                                  const std::vector<char>& targets) {
  std::vector<double> cost(ng.g.edge_count());
  for (int e = 0; e < ng.g.edge_count(); ++e) {
    const auto [u, v] = ng.g.edges[e];
    cost[e] = 0.5 * (rho[u] + rho[v]) * ng.length[e];
  }
  const PathResult pr = shortest_edge_path(ng.g, cost, sources, targets);
  PathConstraint con;
  if (!pr.found) return {std::numeric_limits<double>::infinity(), con};
  con.support = pr.nodes;
  con.coeff.assign(pr.nodes.size(), 0.0);
  for (std::size_t i = 0; i < pr.edge_ids.size(); ++i) {
    const double half = 0.5 * ng.length[pr.edge_ids[i]];
    con.coeff[i] += half;
    con.coeff[i + 1] += half;
  }
  con.bound = 1.0;
  return {pr.length, con};
}

CapacityReport modulus(const MetricSpace& sp, const std::vector<char>& A,
                       const std::vector<char>& B, double p, const SolveConfig& cfg,
                       const NeighborGraph* prebuilt) {
  if (A.size() != sp.size() || B.size() != sp.size()) {
    throw precondition_error("modulus: mask size mismatch");
  }
  if (!(p > 1.0) || p > 16.0) throw precondition_error("modulus: p out of range");
  std::vector<int> sources;
  bool any_b = false;
  for (std::size_t i = 0; i < sp.size(); ++i) {
    if (A[i] && B[i]) throw precondition_error("modulus: sides intersect");
    if (A[i]) sources.push_back(static_cast<int>(i));
    any_b |= (B[i] != 0);
  }
  if (sources.empty() || !any_b) throw precondition_error("modulus: empty side");
  NeighborGraph local;
  if (!prebuilt) local = build_neighbor_graph(sp);
  const NeighborGraph& ng = prebuilt ? *prebuilt : local;
  {
    const std::vector<double> zero(sp.size(), 0.0);
    if (!std::isfinite(crossing_oracle(ng, zero, sources, B).first)) {
      throw domain_error("modulus: the sides are not linked by any neighbor path");
    }
  }
  const ViolationOracle oracle = [&](const std::vector<double>& rho) {
    return crossing_oracle(ng, rho, sources, B);
  };
  SolveConfig sc = cfg;
  sc.p = p;
  // Peeled batches amortize the restricted re-solves over several cuts.
  SolveResult sr = minimize_lp_subject_to_paths(static_cast<int>(sp.size()), sp.weight, sc,
                                                peel_path_cuts(oracle, 8, sc.outer_tol));
  CapacityReport rep;
  rep.p = p;
  rep.depth = -1;
  rep.tau = std::move(sr.tau);
  rep.constraints = sr.constraints;
  rep.oracle_calls = sr.oracle_calls;
  rep.duality_gap = sr.duality_gap;
  if (!sr.feasible) rep.status = "iteration-limit";
  // Exact scaling to the admissibility boundary.
  double val = oracle(rep.tau).first;
  if (std::isfinite(val) && val > 0.0 && std::abs(val - 1.0) > 1e-15) {
    for (double& r : rep.tau) r /= val;
    ++rep.polish_moves;
    val = oracle(rep.tau).first;
  }
  if (val < 1.0 - sc.outer_tol - 1e-9 && rep.status == "ok") rep.status = "inadmissible";
  rep.lp_value = 0.0;
  for (std::size_t i = 0; i < sp.size(); ++i) {
    rep.lp_value += sp.weight[i] * std::pow(rep.tau[i], p);
  }
  rep.weak_value = rep.lp_value;
  rep.from_verts = sources;
  for (std::size_t i = 0; i < sp.size(); ++i) {
    if (B[i]) rep.to_verts.push_back(static_cast<int>(i));
  }
  return rep;
}

std::vector<double> edge_to_vertex_sum(const std::vector<double>& tau_edge, const Filling& f) {
  const EdgeGraph g = graph_from_filling(f);
  if (tau_edge.size() != static_cast<std::size_t>(g.edge_count())) {
    throw precondition_error("edge_to_vertex_sum: weight size mismatch");
  }
  std::vector<double> out(f.vertex_count(), 0.0);
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto [u, v] = g.edges[e];
    out[u] += tau_edge[e];
    out[v] += tau_edge[e];
  }
  return out;
}

std::vector<double> project_to_un(const std::vector<double>& fv, const Filling& f, int n) {
  if (n < 0 || n > f.max_level) throw precondition_error("project_to_un: bad level");
  if (fv.size() != static_cast<std::size_t>(f.vertex_count())) {
    throw precondition_error("project_to_un: vertex function size mismatch");
  }
  const MetricSpace& sp = *f.space;
  std::vector<double> u(sp.size(), 0.0);
  par::for_each_index(static_cast<long long>(sp.size()), [&](long long xi) {
    const int x = static_cast<int>(xi);
    double acc = 0.0;
    for (int v = f.level_begin[n]; v < f.level_begin[n + 1]; ++v) {
      if (sp.dist(x, f.verts[v].center) <= 2.0 * f.verts[v].radius + kBallSlack) {
        acc += fv[v] / f.verts[v].radius;
      }
    }
    u[x] = acc;
  });
  return u;
}

std::vector<double> lift_to_tau(const std::vector<double>& rho, const Filling& f, double p,
                                double K, int* clamped) {
  const MetricSpace& sp = *f.space;
  if (!(p > 1.0) || !(p < sp.Q)) {
    throw precondition_error("lift_to_tau: p must lie strictly between 1 and Q");
  }
  if (!(K >= 1.0)) throw precondition_error("lift_to_tau: K must be >= 1");
  if (rho.size() != sp.size()) throw precondition_error("lift_to_tau: density size mismatch");
  std::vector<double> avg(f.vertex_count(), 0.0);
  std::vector<char> hit_clamp(f.vertex_count(), 0);
  par::for_each_index(f.vertex_count(), [&](long long vi) {
    const FillVertex& fvx = f.verts[vi];
    double radius = K * fvx.radius;
    if (radius > sp.diameter) {
      radius = sp.diameter;
      hit_clamp[vi] = 1;
    }
    double mass = 0.0, acc = 0.0;
    for (std::size_t x = 0; x < sp.size(); ++x) {
      if (sp.dist(static_cast<int>(x), fvx.center) <= radius + kBallSlack) {
        mass += sp.weight[x];
        acc += sp.weight[x] * std::pow(rho[x], p);
      }
    }
    avg[vi] = mass > 0.0 ? std::pow(acc / mass, 1.0 / p)
                         : std::numeric_limits<double>::quiet_NaN();
  });
  for (double a : avg) {
    if (!std::isfinite(a)) throw resolution_error("lift_to_tau: empty averaging ball");
  }
  if (clamped) {
    *clamped = 0;
    for (char c : hit_clamp) *clamped += c;
  }
  const EdgeGraph g = graph_from_filling(f);
  std::vector<double> tau(g.edge_count(), 0.0);
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto [u, v] = g.edges[e];
    tau[e] = f.verts[u].radius * avg[u] + f.verts[v].radius * avg[v];
  }
  return tau;
}

}  // namespace hypcap
