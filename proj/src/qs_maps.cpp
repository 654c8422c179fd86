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

#include "hypcap/qs_maps.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "hypcap/modulus.hpp"
#include "hypcap/parallel.hpp"

namespace hypcap {

MetricSpace snowflake_space(const MetricSpace& sp, double alpha) {
  if (!(alpha > 0.0) || !(alpha < 1.0)) {
    throw precondition_error("snowflake_space: alpha must lie in (0, 1)");
  }
  MetricSpace out = sp;
  out.name = sp.name + "-snowflake";
  out.scale = std::pow(sp.scale, alpha);
  out.alpha = sp.alpha * alpha;
  out.Q = sp.Q / alpha;
  finalize_space(out, true);
  return out;
}

QuasiSymmetry make_point_map(const MetricSpace& from, const MetricSpace& to,
                             std::vector<int> forward, double eta_alpha) {
  if (from.size() != to.size() || forward.size() != from.size()) {
    throw precondition_error("make_point_map: size mismatch");
  }
  QuasiSymmetry qs;
  qs.from = &from;
  qs.to = &to;
  qs.eta_alpha = eta_alpha;
  qs.backward.assign(forward.size(), -1);
  for (std::size_t i = 0; i < forward.size(); ++i) {
    const int img = forward[i];
    if (img < 0 || img >= static_cast<int>(to.size()) || qs.backward[img] != -1) {
      throw precondition_error("make_point_map: not a bijection");
    }
    qs.backward[img] = static_cast<int>(i);
  }
  qs.forward = std::move(forward);
  return qs;
}

QuasiSymmetry identity_snowflake(const MetricSpace& from, const MetricSpace& to, double alpha) {
  std::vector<int> fwd(from.size());
  for (std::size_t i = 0; i < fwd.size(); ++i) fwd[i] = static_cast<int>(i);
  return make_point_map(from, to, std::move(fwd), alpha);
}

QuasiSymmetry inverse_map(const QuasiSymmetry& qs) {
  QuasiSymmetry inv;
  inv.from = qs.to;
  inv.to = qs.from;
  inv.forward = qs.backward;
  inv.backward = qs.forward;
  inv.eta_alpha = 1.0 / qs.eta_alpha;
  return inv;
}

EtaReport eta_test(const QuasiSymmetry& qs, int triples, Rng& rng) {
  EtaReport rep;
  const MetricSpace& X = *qs.from;
  const MetricSpace& Y = *qs.to;
  std::uniform_int_distribution<int> pick(0, static_cast<int>(X.size()) - 1);
  for (int t = 0; t < triples; ++t) {
    const int z = pick(rng), z1 = pick(rng), z2 = pick(rng);
    if (z == z1 || z == z2 || z1 == z2) continue;
    const double dx1 = X.dist(z, z1), dx2 = X.dist(z, z2);
    if (dx2 == 0.0) continue;
    const double ratio_x = dx1 / dx2;
    const double dy1 = Y.dist(qs.forward[z], qs.forward[z1]);
    const double dy2 = Y.dist(qs.forward[z], qs.forward[z2]);
    if (dy2 == 0.0) continue;
    const double ratio_y = dy1 / dy2;
    const double eta = std::pow(ratio_x, qs.eta_alpha);
    ++rep.triples;
    const double excess = eta > 0.0 ? ratio_y / eta - 1.0 : (ratio_y > 0.0 ? 1.0 : 0.0);
    rep.worst_excess = std::max(rep.worst_excess, excess);
    if (excess > 1e-9) ++rep.violations;
  }
  return rep;
}

QiMap qi_extension(const QuasiSymmetry& phi, const Filling& X, const Filling& Y) {
  if (phi.from != X.space || phi.to != Y.space) {
    throw precondition_error("qi_extension: map endpoints do not match the fillings");
  }
  QiMap qm;
  qm.from = &X;
  qm.to = &Y;
  qm.map.assign(X.vertex_count(), 0);
  std::vector<int> fallback_flag(X.vertex_count(), 0);
  par::for_each_index(X.vertex_count(), [&](long long xi) {
    const int x = static_cast<int>(xi);
    std::vector<int> image;
    image.reserve(X.ball[x].size());
    for (int pt : X.ball[x]) image.push_back(phi.forward[pt]);
    std::sort(image.begin(), image.end());
    const int center_img = phi.forward[X.verts[x].center];
    int best = Y.root();
    for (int lv = Y.max_level; lv >= 1; --lv) {
      int found = -1;
      for (int cand : vertices_containing(Y, center_img, lv)) {
        const auto& ball = Y.ball[cand];
        if (std::includes(ball.begin(), ball.end(), image.begin(), image.end())) {
          found = cand;
          break;
        }
      }
      if (found >= 0) {
        best = found;
        break;
      }
    }
    qm.map[x] = best;
    fallback_flag[x] = (best == Y.root() && X.verts[x].level > 0) ? 1 : 0;
  });
  for (int fbk : fallback_flag) qm.root_fallbacks += fbk;

  // Graph distances in Y from every distinct image vertex.
  std::map<int, std::vector<int>> dist_from;
  for (int img : qm.map) {
    if (!dist_from.count(img)) dist_from[img] = bfs_distances(Y, img);
  }
  for (int x = 0; x < X.vertex_count(); ++x) {
    for (int w : X.adj[x]) {
      if (w <= x) continue;
      const int dy = dist_from[qm.map[x]][qm.map[w]];
      if (dy < 0) throw domain_error("qi_extension: image graph disconnected");
      qm.adjacency_bound = std::max(qm.adjacency_bound, dy);
    }
  }
  // Distance-distortion envelope over strided vertex pairs.
  const int stride = std::max(1, X.vertex_count() / 64);
  double big_c = 1.0;
  std::vector<std::pair<int, int>> sampled;
  for (int a = 0; a < X.vertex_count(); a += stride) {
    const std::vector<int> dx = bfs_distances(X, a);
    for (int b = a + stride; b < X.vertex_count(); b += stride) {
      const int dxy = dist_from[qm.map[a]][qm.map[b]];
      if (dx[b] > 0 && dxy > 0) {
        big_c = std::max({big_c, static_cast<double>(dxy) / dx[b],
                          static_cast<double>(dx[b]) / dxy});
      }
      sampled.emplace_back(dx[b], dxy);
    }
  }
  double small_c = 0.0;
  for (const auto& [dx, dy] : sampled) {
    small_c = std::max(small_c, dx / big_c - static_cast<double>(dy));
    small_c = std::max(small_c, dy - big_c * static_cast<double>(dx));
  }
  qm.mult_C = big_c;
  qm.mult_c = small_c;
  return qm;
}

int roundtrip_bound(const QiMap& F, const QiMap& G) {
  if (F.to != G.from || F.from != G.to) {
    throw precondition_error("roundtrip_bound: maps do not compose");
  }
  const Filling& X = *F.from;
  std::map<int, std::vector<int>> dist_from;
  int worst = 0;
  for (int x = 0; x < X.vertex_count(); ++x) {
    const int back = G.map[F.map[x]];
    if (!dist_from.count(back)) dist_from[back] = bfs_distances(X, back);
    const int d = dist_from[back][x];
    if (d < 0) throw domain_error("roundtrip_bound: disconnected filling");
    worst = std::max(worst, d);
  }
  return worst;
}

std::vector<double> transport_edge_function(const std::vector<double>& tau_edge,
                                            const QiMap& G, int D) {
  const Filling& Y = *G.from;  // G maps Y to X
  const Filling& X = *G.to;
  if (D < G.adjacency_bound) {
    throw precondition_error("transport_edge_function: D below the measured adjacency bound");
  }
  const std::vector<double> fsum = edge_to_vertex_sum(tau_edge, X);
  // Ball sums of fsum within graph distance D, cached per distinct image.
  std::map<int, double> ball_sum;
  for (int y = 0; y < Y.vertex_count(); ++y) {
    const int img = G.map[y];
    if (ball_sum.count(img)) continue;
    const std::vector<int> dist = bfs_distances(X, img);
    double acc = 0.0;
    for (int x = 0; x < X.vertex_count(); ++x) {
      if (dist[x] >= 0 && dist[x] <= D) acc += fsum[x];
    }
    ball_sum[img] = acc;
  }
  const EdgeGraph gy = graph_from_filling(Y);
  std::vector<double> sigma(gy.edge_count(), 0.0);
  for (int e = 0; e < gy.edge_count(); ++e) {
    const auto [u, v] = gy.edges[e];
    sigma[e] = ball_sum[G.map[u]] + ball_sum[G.map[v]];
  }
  return sigma;
}

std::vector<double> transport_vertex_function(const std::vector<double>& tau_vertex,
                                              const QiMap& G) {
  const Filling& Y = *G.from;
  std::vector<double> sigma(Y.vertex_count(), 0.0);
  for (int y = 0; y < Y.vertex_count(); ++y) sigma[y] = tau_vertex[G.map[y]];
  return sigma;
}

}  // namespace hypcap
