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
#include <vector>

#include "hypcap/capacity.hpp"
#include "hypcap/core.hpp"
#include "hypcap/filling.hpp"
#include "hypcap/metric_space.hpp"
#include "hypcap/weak_norm.hpp"

using namespace hypcap;

static int failures = 0;

static void check(bool ok, const char* what) {
  std::printf("%s %s\n", ok ? "ok  " : "FAIL", what);
  if (!ok) ++failures;
}

int main() {
  // Series constant: bracket with a hand partial sum, tail-tolerance
  // consistency, monotonicity in M, and the p > 1 precondition.
  {
    const double s21 = s_constant(2.0, 1);
    const double partial =
        1.0 + 1.0 + 1.0 / std::sqrt(3.0) + 1.0 / std::sqrt(7.0) + 1.0 / std::sqrt(15.0);
    check(s21 >= partial - 1e-12, "series constant dominates its partial sum");
    check(s21 <= partial + 1.0, "series constant tail is modest");
    check(std::abs(s_constant(2.0, 1, 1e-6) - s_constant(2.0, 1, 1e-12)) <= 1e-6 + 1e-12,
          "tail tolerance moves the value by at most itself");
    check(s_constant(2.0, 2) > s_constant(2.0, 1), "series constant grows with M");
    bool threw = false;
    try {
      s_constant(1.0, 1);
    } catch (const precondition_error&) {
      threw = true;
    }
    check(threw, "series constant refuses p = 1");
  }

  // Closed-form path bound: exact small values and the p = 1 log form.
  {
    check(std::abs(line_weak_bound(2.0, 4, 1.0) - 4.0) < 1e-15, "weak path bound at p 2 L 4");
    check(std::abs(line_weak_bound(2.0, 1, 3.0) - 6.0) < 1e-15, "weak path bound at p 2 L 1");
    check(std::abs(line_weak_bound(1.0, 1, 0.7) - 0.7) < 1e-15, "p 1 bound at L 1 is b");
    check(std::abs(line_weak_bound(1.0, 8, 2.0) - 2.0 * (1.0 + std::log(8.0))) < 1e-15,
          "p 1 bound uses the log form");
    bool threw = false;
    try {
      line_weak_bound(2.0, 0, 1.0);
    } catch (const precondition_error&) {
      threw = true;
    }
    check(threw, "weak path bound refuses L = 0");
  }

  // Structural lower bound: matches its closed form, shrinks with longer
  // connections, and gates the p = 1 variant behind the opt-in flag.
  {
    const double S = s_constant(2.0, 1);
    const double want = std::pow(1.0 / (2.0 * S + 2.0 * std::sqrt(16.0)), 2.0);
    const double got = positivity_lower_bound(2.0, 16, 1);
    check(std::abs(got - want) < 1e-12 * want, "lower bound matches its closed form");
    check(positivity_lower_bound(2.0, 16, 1) > positivity_lower_bound(2.0, 64, 1),
          "lower bound shrinks as paths lengthen");
    bool threw = false;
    try {
      positivity_lower_bound(1.0, 16, 1);
    } catch (const domain_error&) {
      threw = true;
    }
    check(threw, "p = 1 lower bound needs the opt-in flag");
    const double v1 = positivity_lower_bound(1.0, 16, 1, true);
    check(v1 > 0.0 && v1 < 1.0, "opted-in p = 1 bound is a positive fraction");
    check(v1 > positivity_lower_bound(1.0, 64, 1, true), "p = 1 bound also shrinks with L");
  }

  // Explicit witness on a small square: edge weights follow the radius
  // formula, the certificate is admissible, and the reported norms are the
  // norms of tau / 2.
  MetricSpace sq = build_square(12);
  Filling f = build_filling(sq, 2.0, 3);
  CapacityQuery q;
  q.A.assign(sq.size(), 0);
  q.B.assign(sq.size(), 0);
  for (std::size_t i = 0; i < sq.size(); ++i) {
    if (sq.x[i] <= 1e-9) q.A[i] = 1;
    if (sq.x[i] >= 1.0 - 1e-9) q.B[i] = 1;
  }
  q.mode = AnchorMode::continuum;
  q.p = 2.0;
  q.depth = 3;
  const EdgeGraph g = graph_from_filling(f);
  WitnessReport wr = witness_certificate(f, q);
  {
    check(std::abs(wr.dist_ab - sq.metric_of(1.0)) < 1e-15,
          "witness records the column separation");
    bool formula = true;
    for (int e = 0; e < g.edge_count(); ++e) {
      const auto [u, v] = g.edges[e];
      const double want = 4.0 * (f.verts[u].radius + f.verts[v].radius) / wr.dist_ab;
      formula = formula && std::abs(wr.tau[e] - want) < 1e-12 * want;
    }
    check(formula, "witness weights follow the radius formula");
    check(wr.admissible && wr.min_path >= 2.0 - 1e-9,
          "witness connection length reaches 2");
    std::vector<double> half = wr.tau;
    for (double& t : half) t *= 0.5;
    check(std::abs(wr.weak_value - std::pow(weak_lp_norm(half, q.p), q.p)) <
              1e-12 * std::max(1.0, wr.weak_value),
          "witness weak value is the halved certificate's");
    check(std::abs(wr.lp_value - std::pow(lp_norm(half, q.p), q.p)) <
              1e-12 * std::max(1.0, wr.lp_value),
          "witness strong value is the halved certificate's");
  }

  // Solver upper bound on the same query: admissible, no worse than the
  // witness, and with weak below strong energy.
  {
    SolveConfig cfg;
    CapacityReport r = wcap_upper(f, q, cfg);
    check(r.status == "ok", "solver reports ok status");
    check(static_cast<int>(r.tau.size()) == g.edge_count(), "certificate covers every edge");
    bool nonneg = true;
    for (double t : r.tau) nonneg = nonneg && t >= 0.0;
    check(nonneg, "certificate weights are nonnegative");
    const auto [val, con] = anchor_connection(g, r.tau, r.from_verts, r.to_verts);
    check(val >= 1.0 - cfg.outer_tol - 1e-9, "certificate is admissible");
    std::vector<double> halftau = r.tau;
    for (double& t : halftau) t *= 0.5;
    const double halfval = anchor_connection(g, halftau, r.from_verts, r.to_verts).first;
    check(std::abs(halfval - 0.5 * val) < 1e-12 * std::max(1.0, val),
          "connection length is positively homogeneous");
    check(r.weak_value <= r.lp_value + 1e-12, "weak energy never exceeds strong energy");
    check(r.lp_value <= wr.lp_value * (1.0 + 1e-5) + 1e-12,
          "solver energy is no worse than the witness");

    // Cross-check the direct quadratic route against plain cut generation.
    const EdgeGraph cg = graph_from_filling(f);
    const std::vector<int> from = r.from_verts;
    const std::vector<int> to = r.to_verts;
    const ViolationOracle oracle = [&](const std::vector<double>& tau) {
      return anchor_connection(cg, tau, from, to);
    };
    SolveConfig loop = cfg;
    loop.p = 2.0;
    const SolveResult sr =
        minimize_lp_subject_to_paths(cg.edge_count(), std::vector<double>(cg.edge_count(), 1.0),
                                     loop, oracle);
    check(sr.feasible, "cut generation also solves the small instance");
    check(std::abs(sr.lp_value - r.lp_value) <= 1e-4 * std::max(1.0, r.lp_value),
          "both solver routes agree on the energy");
  }

  // Malformed queries are refused before any solving happens.
  {
    bool threw = false;
    CapacityQuery bad = q;
    bad.depth = f.max_level + 3;
    try {
      wcap_upper(f, bad, SolveConfig{});
    } catch (const depth_error&) {
      threw = true;
    }
    check(threw, "depth beyond the filling is refused");
    threw = false;
    bad = q;
    for (std::size_t i = 0; i < sq.size(); ++i) bad.B[i] = bad.B[i] || bad.A[i];
    try {
      witness_certificate(f, bad);
    } catch (const precondition_error&) {
      threw = true;
    }
    check(threw, "intersecting sides are refused");
  }

  // Nested dyadic splitting on a finer square: the builder self-verifies;
  // re-verify here, then break it deliberately and expect the checker to
  // throw. Unit edge weights make every root-to-leaf run offset_m long.
  {
    MetricSpace sq2 = build_square(20);
    Filling f2 = build_filling(sq2, 4.0, 6);
    const RegularityEstimate reg = regularity_constants(sq2, 3, 16);
    int center_pt = 0;
    double best = 1e9;
    for (std::size_t i = 0; i < sq2.size(); ++i) {
      const double d = std::abs(sq2.x[i] - 0.3) + std::abs(sq2.y[i] - 0.5);
      if (d < best) {
        best = d;
        center_pt = static_cast<int>(i);
      }
    }
    const int root = vertices_containing(f2, center_pt, 2).front();
    BinaryStructure bs = build_binary_structure(f2, root, 1, reg);
    verify_binary_structure(f2, bs);
    check(bs.nodes.size() == 3 && bs.arcs.size() == 2, "one generation yields two children");
    check(bs.offset_m >= 1 && 2 + bs.offset_m <= f2.max_level,
          "offset keeps the children inside the filling");
    check(bs.k_inner > 0.0 && bs.k_inner < 1.0, "inner annulus factor is a fraction");
    const EdgeGraph g2 = graph_from_filling(f2);
    const std::vector<double> ones(g2.edge_count(), 1.0);
    check(std::abs(binary_average_path_length(bs, g2, ones) - bs.offset_m) < 1e-12,
          "unit weights average to the arc length");
    BinaryStructure broken = bs;
    broken.nodes["1"] = broken.nodes["0"];
    bool threw = false;
    try {
      verify_binary_structure(f2, broken);
    } catch (const domain_error&) {
      threw = true;
    }
    check(threw, "coinciding siblings fail verification");
    broken = bs;
    broken.arcs["0"].back() = broken.arcs["0"].front();
    threw = false;
    try {
      verify_binary_structure(f2, broken);
    } catch (const domain_error&) {
      threw = true;
    }
    check(threw, "corrupted connectors fail verification");
  }

  if (failures == 0) std::printf("PASS test_capacity\n");
  return failures == 0 ? 0 : 1;
}
