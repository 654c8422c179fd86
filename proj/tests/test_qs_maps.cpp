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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

#include "hypcap/core.hpp"
#include "hypcap/filling.hpp"
#include "hypcap/metric_space.hpp"
#include "hypcap/path_solver.hpp"
#include "hypcap/qs_maps.hpp"

using namespace hypcap;

static int failures = 0;

static void check(bool ok, const char* what) {
  std::printf("%s %s\n", ok ? "ok  " : "FAIL", what);
  if (!ok) ++failures;
}

int main() {
  MetricSpace sq = build_square(8);
  const double alpha = 0.7;
  MetricSpace sf = snowflake_space(sq, alpha);

  // Snowflaking keeps the points and the diameter, raises distances to a
  // power, and divides the regularity exponent.
  {
    check(sf.size() == sq.size(), "snowflake keeps the point count");
    check(std::abs(sf.diameter - sq.diameter) < 1e-12, "snowflake keeps the diameter");
    check(std::abs(sf.Q - sq.Q / alpha) < 1e-12, "regularity exponent divides by alpha");
    double c_ref = 0.0;
    bool power_law = true;
    for (int i = 0; i < 40; ++i) {
      for (int j = i + 7; j < static_cast<int>(sq.size()); j += 11) {
        const double base = sq.dist(i, j);
        if (base <= 0.0) continue;
        const double c = sf.dist(i, j) / std::pow(base, alpha);
        if (c_ref == 0.0) c_ref = c;
        power_law = power_law && std::abs(c / c_ref - 1.0) < 1e-9;
      }
    }
    check(power_law, "snowflake distances follow one power law");
    bool threw = false;
    try {
      snowflake_space(sq, 1.0);
    } catch (const precondition_error&) {
      threw = true;
    }
    check(threw, "alpha = 1 is refused");
    threw = false;
    try {
      snowflake_space(sq, 0.0);
    } catch (const precondition_error&) {
      threw = true;
    }
    check(threw, "alpha = 0 is refused");
  }

  // The identity into the snowflake satisfies its own power-law distortion
  // bound exactly; an inverse flips the exponent.
  QuasiSymmetry phi = identity_snowflake(sq, sf, alpha);
  {
    Rng rng(31);
    const EtaReport rep = eta_test(phi, 2000, rng);
    check(rep.triples > 1000, "distortion test exercises most triples");
    check(rep.violations == 0, "identity snowflake has no distortion violations");
    check(rep.worst_excess < 1e-9, "distortion ratio sits exactly on the power law");

    QuasiSymmetry inv = inverse_map(phi);
    check(std::abs(inv.eta_alpha - 1.0 / alpha) < 1e-12, "inverse flips the exponent");
    check(inv.forward == phi.backward && inv.backward == phi.forward,
          "inverse swaps the point tables");
    Rng rng2(32);
    const EtaReport back = eta_test(inv, 2000, rng2);
    check(back.violations == 0, "the inverse direction also passes");

    // A transposition of two far points is not quasisymmetric at exponent 1.
    std::vector<int> perm(sq.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    std::swap(perm[0], perm[sq.size() - 1]);
    QuasiSymmetry bad = make_point_map(sq, sq, perm, 1.0);
    Rng rng3(33);
    const EtaReport rb = eta_test(bad, 2000, rng3);
    check(rb.violations > 0 && rb.worst_excess > 0.1, "a far transposition is flagged");

    bool threw = false;
    try {
      make_point_map(sq, sf, std::vector<int>(sq.size() - 1, 0), 1.0);
    } catch (const precondition_error&) {
      threw = true;
    }
    check(threw, "size mismatch is refused");
    threw = false;
    std::vector<int> dup(sq.size(), 0);
    try {
      make_point_map(sq, sf, dup, 1.0);
    } catch (const precondition_error&) {
      threw = true;
    }
    check(threw, "non-bijective table is refused");
  }

  // Vertex extension between the fillings of the two metrics.
  Filling fx = build_filling(sq, 2.0, 2);
  Filling fy = build_filling(sf, 2.0, 2);
  QiMap F = qi_extension(phi, fx, fy);
  QiMap G = qi_extension(inverse_map(phi), fy, fx);
  {
    check(static_cast<int>(F.map.size()) == fx.vertex_count(), "one image per vertex");
    bool contained = true;
    for (int x = 0; x < fx.vertex_count(); ++x) {
      const int m = F.map[x];
      if (m == fy.root()) continue;  // fallback images carry no containment claim
      std::vector<int> image;
      for (int pt : fx.ball[x]) image.push_back(phi.forward[pt]);
      std::sort(image.begin(), image.end());
      const auto& ball = fy.ball[m];
      contained = contained &&
                  std::includes(ball.begin(), ball.end(), image.begin(), image.end());
    }
    check(contained, "image vertex ball swallows the mapped ball");
    int want_bound = 0;
    for (int x = 0; x < fx.vertex_count(); ++x) {
      for (int w : fx.adj[x]) {
        if (w <= x) continue;
        const std::vector<int> dist = bfs_distances(fy, F.map[x]);
        want_bound = std::max(want_bound, dist[F.map[w]]);
      }
    }
    check(F.adjacency_bound == want_bound, "adjacency bound matches a recomputation");
    check(F.mult_C >= 1.0 && G.mult_C >= 1.0, "distortion envelope is at least one");
    const int rt = roundtrip_bound(F, G);
    check(rt >= 0 && rt <= 6, "round trip stays within a few hops");
    bool threw = false;
    try {
      roundtrip_bound(F, F);
    } catch (const precondition_error&) {
      threw = true;
    }
    check(threw, "non-composable round trip is refused");
    threw = false;
    try {
      qi_extension(phi, fy, fx);
    } catch (const precondition_error&) {
      threw = true;
    }
    check(threw, "extension with swapped fillings is refused");
  }

  // Vertex transport is composition with the backward vertex map.
  {
    std::vector<double> tv(fx.vertex_count());
    for (int v = 0; v < fx.vertex_count(); ++v) tv[v] = 0.5 * v + 1.0;
    const std::vector<double> sv = transport_vertex_function(tv, G);
    bool exact = true;
    for (int y = 0; y < fy.vertex_count(); ++y) {
      exact = exact && sv[y] == tv[G.map[y]];
    }
    check(exact, "vertex transport pulls back along the map");
  }

  // Edge transport sums incident weights over image-centered graph balls;
  // mirror it with plain breadth-first searches.
  {
    const EdgeGraph gx = graph_from_filling(fx);
    const EdgeGraph gy = graph_from_filling(fy);
    std::vector<double> tau(gx.edge_count());
    for (int e = 0; e < gx.edge_count(); ++e) tau[e] = 0.25 + 0.01 * (e % 7);
    const int D = G.adjacency_bound + 1;
    const std::vector<double> sigma = transport_edge_function(tau, G, D);
    check(static_cast<int>(sigma.size()) == gy.edge_count(), "one value per target edge");

    std::vector<double> incident(fx.vertex_count(), 0.0);
    for (int e = 0; e < gx.edge_count(); ++e) {
      incident[gx.edges[e].first] += tau[e];
      incident[gx.edges[e].second] += tau[e];
    }
    auto ball_sum = [&](int src) {
      const std::vector<int> dist = bfs_distances(fx, src);
      double acc = 0.0;
      for (int v = 0; v < fx.vertex_count(); ++v) {
        if (dist[v] >= 0 && dist[v] <= D) acc += incident[v];
      }
      return acc;
    };
    bool exact = true;
    for (int e = 0; e < gy.edge_count(); ++e) {
      const auto [u, v] = gy.edges[e];
      const double want = ball_sum(G.map[u]) + ball_sum(G.map[v]);
      exact = exact && std::abs(sigma[e] - want) < 1e-12 * std::max(1.0, want);
    }
    check(exact, "edge transport matches the breadth-first mirror");

    bool threw = false;
    try {
      transport_edge_function(tau, G, G.adjacency_bound - 1);
    } catch (const precondition_error&) {
      threw = true;
    }
    check(threw, "transport range below the adjacency bound is refused");
  }

  if (failures == 0) std::printf("PASS test_qs_maps\n");
  return failures == 0 ? 0 : 1;
}
