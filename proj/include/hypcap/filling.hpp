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

#include <iosfwd>
#include <vector>

#include "hypcap/core.hpp"
#include "hypcap/metric_space.hpp"

namespace hypcap {

struct FillVertex {
  int level = 0;
  int center = 0;     // point id in the space
  double radius = 0;  // 2 * s^-level
};

// Leveled ball graph over nested greedy nets. Vertices are grouped by level;
// vertex 0 is the unique level-0 root. Edges join vertices whose levels
// differ by at most one and whose closed balls intersect.
struct Filling {
  const MetricSpace* space = nullptr;
  double s = 2.0;
  int max_level = 0;
  std::vector<FillVertex> verts;
  std::vector<std::vector<int>> adj;        // sorted neighbor ids
  std::vector<int> level_begin;             // size max_level + 2
  std::vector<std::vector<int>> ball;       // cached ball point ids per vertex
  std::vector<std::vector<int>> nets;       // per-level net member point ids

  int root() const { return 0; }
  int vertex_count() const { return static_cast<int>(verts.size()); }
  int level_of(int v) const { return verts[v].level; }
  int level_count(int k) const { return level_begin[k + 1] - level_begin[k]; }
  long long edge_count() const;
};

// Builds levels 0..max_level. Level-k separation is s^-k; the level-(k+1)
// greedy order lists the level-k net members first, so nets are nested.
Filling build_filling(const MetricSpace& sp, double s, int max_level,
                      long long max_vertices = 2000000);

// Restriction to levels 0..new_max. Vertex ids are level-ordered, so the
// result keeps a prefix of the ids; adjacency and caches are filtered.
Filling truncate_filling(const Filling& f, int new_max);

// Hop distances from src to every vertex (-1 if unreachable).
std::vector<int> bfs_distances(const Filling& f, int src);

// Multi-source hop distances restricted to vertices of level <= level_cap
// (no restriction when level_cap < 0).
std::vector<int> bfs_distances_capped(const Filling& f, const std::vector<int>& srcs,
                                      int level_cap);

int graph_distance(const Filling& f, int v, int w);

// (v | w) relative to the root, from precomputed root distances and one BFS.
double gromov_product(const Filling& f, int v, int w, const std::vector<int>& root_dist,
                      const std::vector<int>& dist_from_v);

struct GromovReport {
  double min_ratio = 0.0;   // diam(B_v u B_w) / s^-(v|w), empirical range
  double max_ratio = 0.0;
  double upper_constant = 0.0;  // 8 s / (s - 1)
  long long violations = 0;
  int pairs = 0;
};

// Samples vertex pairs and compares union-ball diameters against the
// s^-(v|w) scale.
GromovReport check_gromov_comparability(const Filling& f, int pairs, Rng& rng);

struct HyperbolicityReport {
  double delta = 0.0;
  long long violations = 0;
  double worst_defect = 0.0;  // max of min(...) - delta - (v|w) over triples
  int triples = 0;
};

// Checks (v|w) >= min((v|x), (x|w)) - delta over sampled triples.
HyperbolicityReport check_hyperbolicity(const Filling& f, int triples, double delta, Rng& rng);

int max_valence(const Filling& f);
bool is_connected(const Filling& f);
// Every space point lies in some level-k ball, for every k.
bool levels_cover(const Filling& f);

enum class AnchorMode { open, continuum };

// Level-`level` vertices attached to the target point set. open: the whole
// ball lies in the target. continuum: the half-radius ball meets it.
std::vector<int> anchor_vertices(const Filling& f, const std::vector<char>& target, int level,
                                 AnchorMode mode);

// Vertices at the given level whose ball contains the point (sorted ids).
std::vector<int> vertices_containing(const Filling& f, int point, int level);

void save_filling(const Filling& f, std::ostream& os);
Filling load_filling(const MetricSpace& sp, std::istream& is);

}  // namespace hypcap
