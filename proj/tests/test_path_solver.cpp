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

#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "hypcap/path_solver.hpp"
#include "hypcap/weak_norm.hpp"

using namespace hypcap;

static int failures = 0;

static void check(bool ok, const char* what) {
  std::printf("%s %s\n", ok ? "ok  " : "FAIL", what);
  if (!ok) ++failures;
}

// Exhaustive left-right connection oracle for tiny graphs: enumerates all
// simple paths so the constraint generator has a ground-truth adversary.
static ViolationOracle all_paths_oracle(const EdgeGraph& g, const std::vector<int>& sources,
                                        const std::vector<char>& is_target) {
  return [&g, sources, &is_target](const std::vector<double>& tau) {
    double best = std::numeric_limits<double>::infinity();
    PathConstraint con;
    std::vector<int> stack_edges;
    std::vector<char> used(g.nodes, 0);
    std::function<void(int, double)> dfs = [&](int v, double acc) {
      if (is_target[v]) {
        if (acc < best) {
          best = acc;
          con.support = stack_edges;
          con.coeff.clear();
          con.bound = 1.0;
        }
        return;
      }
      for (const auto& [w, e] : g.inc[v]) {
        if (used[w]) continue;
        used[w] = 1;
        stack_edges.push_back(e);
        dfs(w, acc + tau[e]);
        stack_edges.pop_back();
        used[w] = 0;
      }
    };
    for (int s : sources) {
      used[s] = 1;
      dfs(s, 0.0);
      used[s] = 0;
    }
    return std::make_pair(best, con);
  };
}

int main() {
  // A single bridge edge: the optimal admissible weight is tau = 1.
  {
    EdgeGraph g;
    g.nodes = 2;
    g.inc.resize(2);
    g.add_edge(0, 1);
    std::vector<char> tgt = {0, 1};
    SolveConfig cfg;
    SolveResult sr =
        minimize_lp_subject_to_paths(1, {1.0}, cfg, all_paths_oracle(g, {0}, tgt));
    check(sr.feasible, "bridge solve reports feasible");
    check(std::abs(sr.lp_value - 1.0) < 1e-6, "single bridge has p-energy 1");
    check(std::abs(sr.tau[0] - 1.0) < 1e-6, "single bridge weight is 1");
  }

  // m parallel edges: every edge is its own path, so the energy adds up to m.
  for (int m : {2, 5}) {
    EdgeGraph g;
    g.nodes = 2;
    g.inc.resize(2);
    for (int i = 0; i < m; ++i) g.add_edge(0, 1);
    std::vector<char> tgt = {0, 1};
    SolveConfig cfg;
    SolveResult sr = minimize_lp_subject_to_paths(m, std::vector<double>(m, 1.0), cfg,
                                                  all_paths_oracle(g, {0}, tgt));
    check(sr.feasible && std::abs(sr.lp_value - m) < 1e-5 * m,
          "parallel edges have p-energy equal to their count");
  }

  // A series chain of L edges: one path, optimum tau = 1/L, energy L^(1-p).
  for (int L : {3, 7}) {
    EdgeGraph g;
    g.nodes = L + 1;
    g.inc.resize(g.nodes);
    for (int i = 0; i < L; ++i) g.add_edge(i, i + 1);
    std::vector<char> tgt(g.nodes, 0);
    tgt[L] = 1;
    for (double p : {1.5, 2.0, 3.0}) {
      SolveConfig cfg;
      cfg.p = p;
      SolveResult sr = minimize_lp_subject_to_paths(L, std::vector<double>(L, 1.0), cfg,
                                                    all_paths_oracle(g, {0}, tgt));
      const double want = std::pow(static_cast<double>(L), 1.0 - p);
      check(sr.feasible && std::abs(sr.lp_value - want) < 1e-5 * want,
            "series chain energy is L^(1-p)");
    }
  }

  // Objective weights act as edge multiplicities: with weight m on a bridge
  // the optimum is still tau = 1 but the reported energy scales by m.
  {
    EdgeGraph g;
    g.nodes = 2;
    g.inc.resize(2);
    g.add_edge(0, 1);
    std::vector<char> tgt = {0, 1};
    SolveConfig cfg;
    SolveResult sr =
        minimize_lp_subject_to_paths(1, {3.0}, cfg, all_paths_oracle(g, {0}, tgt));
    check(sr.feasible && std::abs(sr.lp_value - 3.0) < 1e-5,
          "objective weight scales the reported energy");
  }

  // Deterministic Dijkstra against the brute-force enumerator on a random
  // sparse graph with distinct weights.
  {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> unif(0.05, 1.0);
    for (int rep = 0; rep < 20; ++rep) {
      EdgeGraph g;
      g.nodes = 7;
      g.inc.resize(g.nodes);
      for (int u = 0; u < g.nodes; ++u) {
        for (int v = u + 1; v < g.nodes; ++v) {
          if (rng() % 3 == 0) g.add_edge(u, v);
        }
      }
      std::vector<double> tau(g.edge_count());
      for (double& t : tau) t = unif(rng);
      std::vector<char> tgt(g.nodes, 0);
      tgt[g.nodes - 1] = 1;
      const PathResult pr = shortest_edge_path(g, tau, {0}, tgt);
      const auto [best, con] = all_paths_oracle(g, {0}, tgt)(tau);
      if (!pr.found) {
        check(!std::isfinite(best), "no path found only when none exists");
        continue;
      }
      check(std::abs(pr.length - best) < 1e-12, "dijkstra length matches enumeration");
      double along = 0.0;
      for (int e : pr.edge_ids) along += tau[e];
      check(std::abs(along - pr.length) < 1e-12, "reported edges sum to the length");
      check(pr.nodes.front() == 0 && tgt[pr.nodes.back()], "path runs source to target");
    }
  }

  // Node-supported variant pays every vertex including the endpoints.
  {
    EdgeGraph g;
    g.nodes = 3;
    g.inc.resize(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    std::vector<char> tgt = {0, 0, 1};
    const PathResult pr = shortest_node_path(g, {0.5, 0.25, 0.125}, {0}, tgt);
    check(pr.found && std::abs(pr.length - 0.875) < 1e-15,
          "node path cost includes both endpoints");
  }

  // PathConstraint semantics: repeated support ids accumulate, empty coeff
  // means all-ones.
  {
    PathConstraint con;
    con.support = {0, 0, 2};
    check(std::abs(con.evaluate({0.5, 9.0, 0.25}) - 1.25) < 1e-15,
          "default coefficients are 1 and repeats accumulate");
    con.coeff = {2.0, 1.0, 4.0};
    check(std::abs(con.evaluate({0.5, 9.0, 0.25}) - 2.5) < 1e-15,
          "explicit coefficients are honored");
  }

  // The restricted solver certifies optimality: primal >= dual and the gap
  // is within the requested tolerance, with the returned tau feasible.
  {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> unif(0.2, 1.5);
    for (int rep = 0; rep < 10; ++rep) {
      const int n = 6;
      std::vector<PathConstraint> cons(4);
      for (auto& c : cons) {
        const int len = 2 + static_cast<int>(rng() % 3);
        for (int i = 0; i < len; ++i) {
          c.support.push_back(static_cast<int>(rng() % n));
          c.coeff.push_back(unif(rng));
        }
        c.bound = unif(rng);
      }
      std::vector<double> w(n, 1.0);
      const RestrictedSolution rs = solve_restricted(n, w, 2.0, cons, 1e-9, 200000);
      check(rs.primal >= rs.dual - 1e-12, "weak duality holds");
      check(rs.primal - rs.dual <= 1e-9 * std::max(1.0, rs.primal) + 1e-12,
            "duality gap is certified within tolerance");
      for (const auto& c : cons) {
        check(c.evaluate(rs.tau) >= c.bound - 1e-7 * std::max(1.0, c.bound),
              "restricted solution satisfies every constraint");
      }
    }
  }

  // Weak-norm polish on a triangle: the detour edge far from tight paths can
  // drop until the detour is exactly admissible, cutting the weak norm.
  {
    EdgeGraph g;
    g.nodes = 3;
    g.inc.resize(3);
    g.add_edge(0, 1);  // direct
    g.add_edge(0, 2);  // detour leg
    g.add_edge(1, 2);  // detour leg
    std::vector<double> tau = {1.0, 0.7, 0.7};
    std::vector<char> tgt = {0, 1, 0};
    const double before = weak_lp_norm(tau, 2.0);
    const int moves = weak_norm_polish_edges(g, tau, 2.0, {0}, tgt, 1e-9);
    const double after = weak_lp_norm(tau, 2.0);
    check(moves > 0, "polish accepts at least one move");
    check(after < before - 0.1, "polish lowers the weak norm");
    const PathResult pr = shortest_edge_path(g, tau, {0}, tgt);
    check(pr.found && pr.length >= 1.0 - 1e-9, "polish preserves admissibility");
    check(std::abs(tau[0] - 1.0) < 1e-12, "tight direct edge is untouched");
    check(std::abs(tau[1] + tau[2] - 1.0) < 1e-9, "detour ends exactly admissible");
  }

  // Generic polish honors an arbitrary oracle.
  {
    const ViolationOracle oracle = [](const std::vector<double>& tau) {
      PathConstraint con;
      con.support = {0, 1};
      return std::make_pair(tau[0] + tau[1], con);
    };
    std::vector<double> tau = {1.0, 0.8};
    const int moves = weak_norm_polish_generic(tau, 2.0, oracle, 1e-9);
    check(moves > 0, "generic polish accepts moves");
    check(tau[0] + tau[1] >= 1.0 - 1e-6, "generic polish keeps the oracle satisfied");
    check(weak_lp_norm(tau, 2.0) < weak_lp_norm({1.0, 0.8}, 2.0) - 1e-3,
          "generic polish lowers the weak norm");
  }

  // Peeled batches: the first cut agrees with the pristine oracle and the
  // extras are genuinely violated and distinct.
  {
    EdgeGraph g;
    g.nodes = 4;
    g.inc.resize(4);
    g.add_edge(0, 1);
    g.add_edge(1, 3);
    g.add_edge(0, 2);
    g.add_edge(2, 3);
    std::vector<char> tgt = {0, 0, 0, 1};
    const std::vector<double> tau = {0.1, 0.1, 0.2, 0.2};
    const ViolationOracle single = [&](const std::vector<double>& t) {
      const PathResult pr = shortest_edge_path(g, t, {0}, tgt);
      PathConstraint con;
      con.support = pr.edge_ids;
      con.bound = 1.0;
      return std::make_pair(pr.length, con);
    };
    const MultiViolationOracle peeled = peel_path_cuts(single, 4, 1e-6);
    const auto batch = peeled(tau);
    check(batch.size() == 2, "peeling finds both disjoint routes");
    check(std::abs(batch.front().first - 0.2) < 1e-15,
          "first peeled cut is the exact minimizer");
    for (const auto& [v, con] : batch) {
      check(con.evaluate(tau) < 1.0 - 1e-6, "every peeled cut is violated");
    }
    if (batch.size() == 2) {
      check(batch[0].second.support != batch[1].second.support,
            "peeled cuts have distinct supports");
    }
  }

  if (failures == 0) std::printf("PASS test_path_solver\n");
  return failures == 0 ? 0 : 1;
}
