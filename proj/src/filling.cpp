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

#include "hypcap/filling.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "hypcap/parallel.hpp"

namespace hypcap {

long long Filling::edge_count() const {
  long long twice = 0;
  for (const auto& a : adj) twice += static_cast<long long>(a.size());
  return twice / 2;
}

Filling build_filling(const MetricSpace& sp, double s, int max_level, long long max_vertices) {
  if (!(sp.diameter > 0.0) || sp.diameter >= 1.0) {
    throw precondition_error("build_filling: space diameter must lie in (0, 1)");
  }
  if (!(s > 1.0) || s > 10.0) throw precondition_error("build_filling: s must lie in (1, 10]");
  if (max_level < 0 || max_level > 64) {
    throw precondition_error("build_filling: max_level out of range");
  }
  Filling f;
  f.space = &sp;
  f.s = s;
  f.max_level = max_level;
  const std::size_t n = sp.size();

  std::vector<int> identity(n);
  std::iota(identity.begin(), identity.end(), 0);
  std::vector<int> prev_members;
  long long total = 0;
  for (int k = 0; k <= max_level; ++k) {
    const double delta = std::pow(s, -static_cast<double>(k));
    std::vector<int> order;
    if (k == 0) {
      order = identity;
    } else {
      // Nested nets: previous members first, then the rest in id order.
      order.reserve(n);
      std::vector<char> in_prev(n, 0);
      for (int m : prev_members) {
        order.push_back(m);
        in_prev[m] = 1;
      }
      for (int p : identity) {
        if (!in_prev[p]) order.push_back(p);
      }
    }
    SeparatedNet net = maximal_separated_net(sp, delta, order);
    total += static_cast<long long>(net.members.size());
    if (total > max_vertices) throw resource_error("build_filling: vertex budget exceeded");
    f.nets.push_back(net.members);
    prev_members = net.members;
  }
  if (f.nets[0].size() != 1) {
    throw precondition_error("build_filling: level-0 net is not a single root");
  }

  f.level_begin.assign(max_level + 2, 0);
  for (int k = 0; k <= max_level; ++k) {
    const double radius = 2.0 * std::pow(s, -static_cast<double>(k));
    for (int p : f.nets[k]) f.verts.push_back({k, p, radius});
    f.level_begin[k + 1] = static_cast<int>(f.verts.size());
  }

  const std::size_t nv = f.verts.size();
  f.ball.resize(nv);
  par::for_each_index(nv, [&](std::size_t v) {
    f.ball[v] = ball_points(sp, f.verts[v].center, f.verts[v].radius);
  });

  f.adj.resize(nv);
  par::for_each_index(nv, [&](std::size_t vi) {
    const int v = static_cast<int>(vi);
    const FillVertex& a = f.verts[v];
    auto& out = f.adj[v];
    for (int kl = std::max(0, a.level - 1); kl <= std::min(max_level, a.level + 1); ++kl) {
      for (int w = f.level_begin[kl]; w < f.level_begin[kl + 1]; ++w) {
        if (w == v) continue;
        const FillVertex& b = f.verts[w];
        if (sp.dist(a.center, b.center) <= a.radius + b.radius + kBallSlack) {
          out.push_back(w);
        }
      }
    }
  });
  return f;
}

Filling truncate_filling(const Filling& f, int new_max) {
  if (new_max < 0 || new_max > f.max_level) {
    throw precondition_error("truncate_filling: level out of range");
  }
  Filling t;
  t.space = f.space;
  t.s = f.s;
  t.max_level = new_max;
  const int cut = f.level_begin[new_max + 1];
  t.verts.assign(f.verts.begin(), f.verts.begin() + cut);
  t.level_begin.assign(f.level_begin.begin(), f.level_begin.begin() + new_max + 2);
  t.ball.assign(f.ball.begin(), f.ball.begin() + cut);
  t.nets.assign(f.nets.begin(), f.nets.begin() + new_max + 1);
  t.adj.resize(cut);
  for (int v = 0; v < cut; ++v) {
    for (int w : f.adj[v]) {
      if (w < cut) t.adj[v].push_back(w);
    }
  }
  return t;
}

std::vector<int> bfs_distances(const Filling& f, int src) {
  return bfs_distances_capped(f, {src}, -1);
}

std::vector<int> bfs_distances_capped(const Filling& f, const std::vector<int>& srcs,
                                      int level_cap) {
  std::vector<int> dist(f.verts.size(), -1);
  std::deque<int> q;
  for (int s0 : srcs) {
    if (level_cap >= 0 && f.verts[s0].level > level_cap) continue;
    if (dist[s0] == 0) continue;
    dist[s0] = 0;
    q.push_back(s0);
  }
  while (!q.empty()) {
    const int v = q.front();
    q.pop_front();
    for (int w : f.adj[v]) {
      if (dist[w] >= 0) continue;
      if (level_cap >= 0 && f.verts[w].level > level_cap) continue;
      dist[w] = dist[v] + 1;
      q.push_back(w);
    }
  }
  return dist;
}

int graph_distance(const Filling& f, int v, int w) {
  const auto dist = bfs_distances(f, v);
  return dist[w];
}

double gromov_product(const Filling& f, int v, int w, const std::vector<int>& root_dist,
                      const std::vector<int>& dist_from_v) {
  (void)f;
  return 0.5 * (root_dist[v] + root_dist[w] - dist_from_v[w]);
}

namespace {

std::vector<int> union_ids(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

GromovReport check_gromov_comparability(const Filling& f, int pairs, Rng& rng) {
  if (pairs < 1) throw precondition_error("check_gromov_comparability: pairs must be positive");
  GromovReport rep;
  rep.pairs = pairs;
  rep.upper_constant = 8.0 * f.s / (f.s - 1.0);
  rep.min_ratio = std::numeric_limits<double>::infinity();
  rep.max_ratio = 0.0;
  const int nv = f.vertex_count();
  std::uniform_int_distribution<int> pick(0, nv - 1);
  std::vector<std::pair<int, int>> sampled(pairs);
  for (auto& pr : sampled) pr = {pick(rng), pick(rng)};
  const auto root_dist = bfs_distances(f, f.root());
  std::unordered_map<int, std::vector<int>> from;
  for (const auto& [v, w] : sampled) {
    if (!from.count(v)) from.emplace(v, bfs_distances(f, v));
  }
  for (const auto& [v, w] : sampled) {
    const double gp = gromov_product(f, v, w, root_dist, from.at(v));
    const double scale_len = std::pow(f.s, -gp);
    const double diam = subset_diameter(*f.space, union_ids(f.ball[v], f.ball[w]));
    const double ratio = diam / scale_len;
    rep.min_ratio = std::min(rep.min_ratio, ratio);
    rep.max_ratio = std::max(rep.max_ratio, ratio);
    if (diam > rep.upper_constant * scale_len + 1e-9) ++rep.violations;
  }
  return rep;
}

HyperbolicityReport check_hyperbolicity(const Filling& f, int triples, double delta, Rng& rng) {
  if (triples < 1) throw precondition_error("check_hyperbolicity: triples must be positive");
  HyperbolicityReport rep;
  rep.delta = delta;
  rep.triples = triples;
  rep.worst_defect = -std::numeric_limits<double>::infinity();
  const int nv = f.vertex_count();
  std::uniform_int_distribution<int> pick(0, nv - 1);
  std::vector<std::array<int, 3>> sampled(triples);
  for (auto& t : sampled) t = {pick(rng), pick(rng), pick(rng)};
  const auto root_dist = bfs_distances(f, f.root());
  std::unordered_map<int, std::vector<int>> from;
  for (const auto& t : sampled) {
    if (!from.count(t[0])) from.emplace(t[0], bfs_distances(f, t[0]));
    if (!from.count(t[1])) from.emplace(t[1], bfs_distances(f, t[1]));
  }
  for (const auto& t : sampled) {
    const int v = t[0], x = t[1], w = t[2];
    const double vw = gromov_product(f, v, w, root_dist, from.at(v));
    const double vx = gromov_product(f, v, x, root_dist, from.at(v));
    const double xw = gromov_product(f, x, w, root_dist, from.at(x));
    const double defect = std::min(vx, xw) - delta - vw;
    rep.worst_defect = std::max(rep.worst_defect, defect);
    if (defect > 1e-9) ++rep.violations;
  }
  return rep;
}

int max_valence(const Filling& f) {
  std::size_t best = 0;
  for (const auto& a : f.adj) best = std::max(best, a.size());
  return static_cast<int>(best);
}

bool is_connected(const Filling& f) {
  const auto dist = bfs_distances(f, f.root());
  return std::all_of(dist.begin(), dist.end(), [](int d) { return d >= 0; });
}

bool levels_cover(const Filling& f) {
  const std::size_t n = f.space->size();
  for (int k = 0; k <= f.max_level; ++k) {
    std::vector<char> covered(n, 0);
    for (int v = f.level_begin[k]; v < f.level_begin[k + 1]; ++v) {
      for (int p : f.ball[v]) covered[p] = 1;
    }
    if (!std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; })) {
      return false;
    }
  }
  return true;
}

std::vector<int> anchor_vertices(const Filling& f, const std::vector<char>& target, int level,
                                 AnchorMode mode) {
  if (target.size() != f.space->size()) {
    throw precondition_error("anchor_vertices: target size mismatch");
  }
  if (level < 0 || level > f.max_level) {
    throw precondition_error("anchor_vertices: level out of range");
  }
  std::vector<int> out;
  for (int v = f.level_begin[level]; v < f.level_begin[level + 1]; ++v) {
    if (mode == AnchorMode::open) {
      bool all_in = !f.ball[v].empty();
      for (int p : f.ball[v]) {
        if (!target[p]) {
          all_in = false;
          break;
        }
      }
      if (all_in) out.push_back(v);
    } else {
      const double half = f.verts[v].radius / 2.0;
      for (int p : f.ball[v]) {
        if (target[p] && f.space->dist(f.verts[v].center, p) <= half + kBallSlack) {
          out.push_back(v);
          break;
        }
      }
    }
  }
  return out;
}

std::vector<int> vertices_containing(const Filling& f, int point, int level) {
  std::vector<int> out;
  for (int v = f.level_begin[level]; v < f.level_begin[level + 1]; ++v) {
    if (f.space->dist(f.verts[v].center, point) <= f.verts[v].radius + kBallSlack) {
      out.push_back(v);
    }
  }
  return out;
}

void save_filling(const Filling& f, std::ostream& os) {
  os << "hypcap-filling v1\n";
  os << f.space->name << " " << f.space->size() << " " << f.s << " " << f.max_level << "\n";
  os.precision(17);
  for (int v = 0; v < f.vertex_count(); ++v) {
    const FillVertex& a = f.verts[v];
    os << v << " " << a.level << " " << a.center << " " << a.radius << "\n";
  }
  os << "edges\n";
  for (int v = 0; v < f.vertex_count(); ++v) {
    for (int w : f.adj[v]) {
      if (v < w) os << v << " " << w << "\n";
    }
  }
}

Filling load_filling(const MetricSpace& sp, std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != "hypcap-filling v1") {
    throw io_error("load_filling: bad header");
  }
  Filling f;
  f.space = &sp;
  std::string name;
  std::size_t n = 0;
  if (!(is >> name >> n >> f.s >> f.max_level)) throw io_error("load_filling: bad space line");
  if (n != sp.size()) throw io_error("load_filling: space size mismatch");
  std::getline(is, line);
  int expected = 0;
  while (std::getline(is, line)) {
    if (line == "edges") break;
    std::istringstream ls(line);
    int id, level, center;
    double radius;
    if (!(ls >> id >> level >> center >> radius)) throw io_error("load_filling: bad vertex line");
    if (id != expected++) throw io_error("load_filling: vertex ids must be dense");
    f.verts.push_back({level, center, radius});
  }
  f.adj.resize(f.verts.size());
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    int u, v;
    if (!(ls >> u >> v)) throw io_error("load_filling: bad edge line");
    f.adj[u].push_back(v);
    f.adj[v].push_back(u);
  }
  for (auto& a : f.adj) std::sort(a.begin(), a.end());
  f.level_begin.assign(f.max_level + 2, 0);
  f.nets.assign(f.max_level + 1, {});
  for (int v = 0; v < static_cast<int>(f.verts.size()); ++v) {
    f.nets[f.verts[v].level].push_back(f.verts[v].center);
  }
  int acc = 0;
  for (int k = 0; k <= f.max_level; ++k) {
    f.level_begin[k] = acc;
    acc += static_cast<int>(f.nets[k].size());
  }
  f.level_begin[f.max_level + 1] = acc;
  f.ball.resize(f.verts.size());
  par::for_each_index(f.verts.size(), [&](std::size_t v) {
    f.ball[v] = ball_points(sp, f.verts[v].center, f.verts[v].radius);
  });
  return f;
}

}  // namespace hypcap
