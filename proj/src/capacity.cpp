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

#include "hypcap/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include "hypcap/parallel.hpp"
#include "hypcap/weak_norm.hpp"

namespace hypcap {

namespace {

std::vector<int> mask_ids(const std::vector<char>& mask) {
  std::vector<int> ids;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i]) ids.push_back(static_cast<int>(i));
  }
  return ids;
}

// Connectivity of a point subset under links of length <= 2 x mesh.
bool subset_connected(const MetricSpace& sp, const std::vector<int>& ids) {
  if (ids.size() <= 1) return true;
  const double link = 2.0 * sp.mesh + kBallSlack;
  std::vector<char> seen(ids.size(), 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const int i = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < ids.size(); ++j) {
      if (!seen[j] && sp.dist(ids[i], ids[j]) <= link) {
        seen[j] = 1;
        ++reached;
        queue.push_back(static_cast<int>(j));
      }
    }
  }
  return reached == ids.size();
}

constexpr int kOverlapCap = 32;

}  // namespace

double dist_between_sets(const MetricSpace& sp, const std::vector<char>& A,
                         const std::vector<char>& B) {
  const std::vector<int> a = mask_ids(A);
  const std::vector<int> b = mask_ids(B);
  if (a.empty() || b.empty()) throw precondition_error("dist_between_sets: empty set");
  const double neg_min = par::max_terms(
      static_cast<long long>(a.size()), -std::numeric_limits<double>::infinity(),
      [&](long long i) {
        double best = std::numeric_limits<double>::infinity();
        for (int j : b) best = std::min(best, sp.dist(a[i], j));
        return -best;
      });
  return -neg_min;
}

void validate_query(const MetricSpace& sp, const CapacityQuery& q) {
  if (q.A.size() != sp.size() || q.B.size() != sp.size()) {
    throw precondition_error("capacity query: mask size mismatch");
  }
  if (!(q.p >= 1.0) || q.p > 16.0) throw precondition_error("capacity query: p out of range");
  if (q.depth < 0) throw precondition_error("capacity query: negative depth");
  const std::vector<int> a = mask_ids(q.A);
  const std::vector<int> b = mask_ids(q.B);
  if (a.empty() || b.empty()) throw precondition_error("capacity query: empty side");
  for (std::size_t i = 0; i < sp.size(); ++i) {
    if (q.A[i] && q.B[i]) throw precondition_error("capacity query: sides intersect");
  }
  if (q.mode == AnchorMode::open) {
    if (!(dist_between_sets(sp, q.A, q.B) > 0.0)) {
      throw precondition_error("capacity query: open mode needs positive separation");
    }
  } else {
    if (a.size() < 2 || b.size() < 2) {
      throw precondition_error("capacity query: continuum sides need more than one point");
    }
    if (!subset_connected(sp, a) || !subset_connected(sp, b)) {
      throw precondition_error("capacity query: continuum sides must be connected");
    }
  }
}

std::pair<double, PathConstraint> anchor_connection(const EdgeGraph& g,
                                                    const std::vector<double>& tau,
                                                    const std::vector<int>& from_verts,
                                                    const std::vector<int>& to_verts) {
  if (from_verts.empty() || to_verts.empty()) {
    throw precondition_error("anchor_connection: empty anchor family");
  }
  std::vector<char> in_from(g.nodes, 0), in_to(g.nodes, 0);
  for (int v : from_verts) in_from[v] = 1;
  for (int v : to_verts) in_to[v] = 1;
  std::vector<int> overlap, from_only;
  for (int v : from_verts) {
    if (in_to[v]) {
      overlap.push_back(v);
    } else {
      from_only.push_back(v);
    }
  }
  if (static_cast<int>(overlap.size()) > kOverlapCap) {
    throw resolution_error("anchor_connection: anchor families overlap too heavily");
  }
  PathResult best;
  const auto consider = [&](const std::vector<int>& srcs, const std::vector<char>& tgt) {
    bool any = false;
    for (char c : tgt) any |= (c != 0);
    if (!any || srcs.empty()) return;
    PathResult pr = shortest_edge_path(g, tau, srcs, tgt);
    if (pr.found && pr.length < best.length) best = std::move(pr);
  };
  {
    std::vector<char> tgt(g.nodes, 0);
    for (int v : to_verts) {
      if (!in_from[v]) tgt[v] = 1;
    }
    consider(from_verts, tgt);
  }
  consider(from_only, in_to);
  for (int u : overlap) {
    std::vector<char> tgt(g.nodes, 0);
    for (int w : overlap) {
      if (w != u) tgt[w] = 1;
    }
    consider({u}, tgt);
  }
  PathConstraint con;
  if (!best.found) {
    return {std::numeric_limits<double>::infinity(), con};
  }
  con.support = best.edge_ids;
  con.bound = 1.0;
  return {best.length, con};
}

namespace {

// Potential with the from-side clamped at 0, the to-side at 1, and free
// nodes relaxed to the weighted average of their neighbors. Preconditioned
// conjugate gradient on the graph Laplacian; free components touching
// neither side keep potential 0 (their right-hand side vanishes).
std::vector<double> unit_potential_tau(const EdgeGraph& g, const std::vector<int>& from_verts,
                                       const std::vector<int>& to_verts) {
  const int n = g.nodes;
  std::vector<char> clamped(n, 0);
  std::vector<double> u(n, 0.0);
  for (int v : from_verts) clamped[v] = 1;
  for (int v : to_verts) {
    clamped[v] = 1;
    u[v] = 1.0;
  }
  std::vector<double> deg(n, 0.0);
  for (const auto& [a, b] : g.edges) {
    deg[a] += 1.0;
    deg[b] += 1.0;
  }
  std::vector<int> free_ids;
  for (int v = 0; v < n; ++v) {
    if (!clamped[v] && deg[v] > 0.0) free_ids.push_back(v);
  }
  if (!free_ids.empty()) {
    const std::size_t nf = free_ids.size();
    std::vector<int> slot(n, -1);
    for (std::size_t i = 0; i < nf; ++i) slot[free_ids[i]] = static_cast<int>(i);
    // Laplacian action restricted to free nodes; clamped values enter b.
    std::vector<double> b(nf, 0.0);
    for (std::size_t i = 0; i < nf; ++i) {
      for (const auto& [w, e] : g.inc[free_ids[i]]) {
        if (clamped[w]) b[i] += u[w];
      }
    }
    std::vector<double> x(nf, 0.0), r = b, z(nf), p(nf), q(nf);
    const auto matvec = [&](const std::vector<double>& in, std::vector<double>& out) {
      par::for_each_index(static_cast<long long>(nf), [&](long long ii) {
        const int v = free_ids[ii];
        double acc = deg[v] * in[ii];
        for (const auto& [w, e] : g.inc[v]) {
          if (slot[w] >= 0) acc -= in[slot[w]];
        }
        out[ii] = acc;
      });
    };
    const auto dot = [&](const std::vector<double>& a2, const std::vector<double>& b2) {
      double acc = 0.0;
      for (std::size_t i = 0; i < a2.size(); ++i) acc += a2[i] * b2[i];
      return acc;
    };
    double bnorm = std::sqrt(dot(b, b));
    for (std::size_t i = 0; i < nf; ++i) z[i] = r[i] / deg[free_ids[i]];
    p = z;
    double rz = dot(r, z);
    for (int it = 0; it < 20000 && rz > 0.0; ++it) {
      if (std::sqrt(dot(r, r)) <= 1e-13 * std::max(1.0, bnorm)) break;
      matvec(p, q);
      const double pq = dot(p, q);
      if (!(pq > 0.0)) break;
      const double alpha = rz / pq;
      for (std::size_t i = 0; i < nf; ++i) {
        x[i] += alpha * p[i];
        r[i] -= alpha * q[i];
      }
      for (std::size_t i = 0; i < nf; ++i) z[i] = r[i] / deg[free_ids[i]];
      const double rz_new = dot(r, z);
      const double beta = rz_new / rz;
      rz = rz_new;
      for (std::size_t i = 0; i < nf; ++i) p[i] = z[i] + beta * p[i];
    }
    for (std::size_t i = 0; i < nf; ++i) u[free_ids[i]] = x[i];
  }
  std::vector<double> tau(g.edge_count(), 0.0);
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto [a, bnode] = g.edges[e];
    tau[e] = std::abs(u[a] - u[bnode]);
  }
  return tau;
}

}  // namespace

CapacityReport wcap_upper(const Filling& f, const CapacityQuery& q, const SolveConfig& cfg) {
  validate_query(*f.space, q);
  if (q.depth > f.max_level) throw depth_error("wcap_upper: depth beyond filling");
  CapacityReport rep;
  rep.p = q.p;
  rep.depth = q.depth;
  rep.from_verts = anchor_vertices(f, q.A, q.depth, q.mode);
  rep.to_verts = anchor_vertices(f, q.B, q.depth, q.mode);
  if (rep.from_verts.empty() || rep.to_verts.empty()) {
    throw empty_anchor_error("wcap_upper: no anchor vertex on one side");
  }
  const EdgeGraph g = graph_from_filling(f);
  SolveConfig sc = cfg;
  sc.p = q.p;
  if (!(sc.p > 1.0)) {
    throw precondition_error("wcap_upper: the l^p surrogate solve needs p > 1");
  }
  const std::vector<double> ones(g.edge_count(), 1.0);
  const ViolationOracle oracle = [&](const std::vector<double>& tau) {
    return anchor_connection(g, tau, rep.from_verts, rep.to_verts);
  };
  const bool no_overlap = [&] {
    std::vector<char> in_to(g.nodes, 0);
    for (int v : rep.to_verts) in_to[v] = 1;
    for (int v : rep.from_verts) {
      if (in_to[v]) return false;
    }
    return true;
  }();
  // Quadratic energy with disjoint sides is exact without any cut loop: the
  // optimal weight is the potential gradient (paths telescope to >= 1, and
  // the flow decomposition bounds every admissible weight from below).
  const bool exact_quadratic = sc.p == 2.0 && no_overlap;
  if (exact_quadratic) {
    rep.tau = unit_potential_tau(g, rep.from_verts, rep.to_verts);
    rep.oracle_calls = 1;
    const double mv = oracle(rep.tau).first;
    if (std::isfinite(mv) && mv > 0.0) {
      for (double& t : rep.tau) t /= mv;
    } else {
      rep.tau.assign(g.edge_count(), 0.0);  // sides not connected: zero is optimal
    }
  } else {
    // Peeled batches amortize the restricted re-solves over several cuts.
    SolveResult sr = minimize_lp_subject_to_paths(g.edge_count(), ones, sc,
                                                  peel_path_cuts(oracle, 8, sc.outer_tol));
    rep.tau = std::move(sr.tau);
    rep.constraints = sr.constraints;
    rep.oracle_calls = sr.oracle_calls;
    rep.duality_gap = sr.duality_gap;
    if (!sr.feasible) rep.status = "iteration-limit";
  }
  rep.polish_moves += weak_norm_polish_generic(rep.tau, sc.p, oracle, sc.outer_tol);
  if (no_overlap && !exact_quadratic) {
    std::vector<char> in_to(g.nodes, 0);
    for (int v : rep.to_verts) in_to[v] = 1;
    rep.polish_moves +=
        weak_norm_polish_edges(g, rep.tau, sc.p, rep.from_verts, in_to, 1e-9);
    rep.polish_moves += weak_norm_polish_generic(rep.tau, sc.p, oracle, sc.outer_tol);
  }

  const double final_value = oracle(rep.tau).first;
  const bool admissible = final_value >= 1.0 - sc.outer_tol - 1e-9;
  if (!admissible && rep.status == "ok") rep.status = "inadmissible";
  rep.lp_value = 0.0;
  for (double t : rep.tau) rep.lp_value += std::pow(t, sc.p);
  rep.weak_value = std::pow(weak_lp_norm(rep.tau, sc.p), sc.p);
  return rep;
}

WitnessReport witness_certificate(const Filling& f, const CapacityQuery& q) {
  validate_query(*f.space, q);
  if (q.depth > f.max_level) throw depth_error("witness_certificate: depth beyond filling");
  const std::vector<int> from = anchor_vertices(f, q.A, q.depth, q.mode);
  const std::vector<int> to = anchor_vertices(f, q.B, q.depth, q.mode);
  if (from.empty() || to.empty()) {
    throw empty_anchor_error("witness_certificate: no anchor vertex on one side");
  }
  WitnessReport wr;
  wr.dist_ab = dist_between_sets(*f.space, q.A, q.B);
  const EdgeGraph g = graph_from_filling(f);
  wr.tau.assign(g.edge_count(), 0.0);
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto [u, v] = g.edges[e];
    wr.tau[e] = 4.0 * (f.verts[u].radius + f.verts[v].radius) / wr.dist_ab;
  }
  wr.min_path = anchor_connection(g, wr.tau, from, to).first;
  wr.admissible = wr.min_path >= 2.0 - 1e-9;
  std::vector<double> half = wr.tau;
  for (double& t : half) t *= 0.5;
  wr.weak_value = std::pow(weak_lp_norm(half, q.p), q.p);
  wr.lp_value = lp_norm(half, q.p);
  wr.lp_value = std::pow(wr.lp_value, q.p);
  return wr;
}

namespace {

// Smallest-id vertex at `level` whose ball contains the point.
int first_containing(const Filling& f, int point, int level) {
  const std::vector<int> cands = vertices_containing(f, point, level);
  if (cands.empty()) {
    throw domain_error("binary structure: covering failed at an intermediate level");
  }
  return cands.front();
}

bool adjacent_in(const Filling& f, int v, int w) {
  const auto& nb = f.adj[v];
  return std::binary_search(nb.begin(), nb.end(), w);
}

// Doubled balls as exact point sets: no space point inside both.
bool doubled_balls_disjoint(const MetricSpace& sp, const FillVertex& a, const FillVertex& b) {
  const long long n = static_cast<long long>(sp.size());
  const double hit = par::max_terms(n, 0.0, [&](long long i) {
    const int pi = static_cast<int>(i);
    const bool in_a = sp.dist(pi, a.center) <= 2.0 * a.radius + kBallSlack;
    const bool in_b = sp.dist(pi, b.center) <= 2.0 * b.radius + kBallSlack;
    return (in_a && in_b) ? 1.0 : 0.0;
  });
  return hit == 0.0;
}

std::vector<int> descend_arc(const Filling& f, int top, int child, int m) {
  const int base = f.verts[top].level;
  const int target_point = f.verts[child].center;
  std::vector<int> arc{top};
  for (int j = 1; j < m; ++j) {
    arc.push_back(first_containing(f, target_point, base + j));
  }
  arc.push_back(child);
  for (std::size_t i = 0; i + 1 < arc.size(); ++i) {
    if (!adjacent_in(f, arc[i], arc[i + 1])) {
      throw domain_error("binary structure: connector path broke adjacency");
    }
  }
  return arc;
}

}  // namespace

BinaryStructure build_binary_structure(const Filling& f, int root, int gens,
                                       const RegularityEstimate& reg) {
  if (root < 0 || root >= f.vertex_count()) {
    throw precondition_error("build_binary_structure: root out of range");
  }
  if (gens < 0) throw precondition_error("build_binary_structure: negative generations");
  if (!(reg.c_Q > 0.0) || !(reg.C_Q >= reg.c_Q)) {
    throw precondition_error("build_binary_structure: invalid regularity constants");
  }
  const MetricSpace& sp = *f.space;
  BinaryStructure bs;
  bs.root = root;
  bs.k_inner = 0.95 * 0.75 * std::pow(reg.c_Q / reg.C_Q, 1.0 / sp.Q);
  int m = 1;
  while (std::pow(f.s, -m) >= bs.k_inner / 16.0) {
    ++m;
    if (m > 64) throw resolution_error("build_binary_structure: separation factor too small");
  }
  bs.offset_m = m;
  if (f.verts[root].level + gens * m > f.max_level) {
    throw depth_error("build_binary_structure: not enough levels below the root");
  }
  bs.nodes[""] = root;
  std::vector<std::string> frontier{""};
  for (int gen = 0; gen < gens; ++gen) {
    std::vector<std::string> next;
    for (const std::string& gkey : frontier) {
      const int v = bs.nodes[gkey];
      const FillVertex& pv = f.verts[v];
      const int child_level = pv.level + m;
      const int center_child = first_containing(f, pv.center, child_level);
      // Annulus candidates, nearest-first by id, until the invariants verify.
      int ring_child = -1;
      for (int pt : f.ball[v]) {
        const double d = sp.dist(pt, pv.center);
        if (d < bs.k_inner * pv.radius || d > 0.75 * pv.radius) continue;
        const int cand = first_containing(f, pt, child_level);
        if (cand == center_child) continue;
        if (!doubled_balls_disjoint(sp, f.verts[center_child], f.verts[cand])) continue;
        ring_child = cand;
        break;
      }
      if (ring_child < 0) {
        throw resolution_error("build_binary_structure: no separated sibling in the annulus");
      }
      bs.nodes[gkey + "0"] = center_child;
      bs.nodes[gkey + "1"] = ring_child;
      bs.arcs[gkey + "0"] = descend_arc(f, v, center_child, m);
      bs.arcs[gkey + "1"] = descend_arc(f, v, ring_child, m);
      next.push_back(gkey + "0");
      next.push_back(gkey + "1");
    }
    frontier = std::move(next);
  }
  verify_binary_structure(f, bs);
  return bs;
}

void verify_binary_structure(const Filling& f, const BinaryStructure& bs) {
  const MetricSpace& sp = *f.space;
  const auto ball_subset = [&](int inner, int outer) {
    const auto& a = f.ball[inner];
    const auto& b = f.ball[outer];
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  const int root_level = f.verts[bs.root].level;
  for (const auto& [gkey, v] : bs.nodes) {
    if (f.verts[v].level != root_level + bs.offset_m * static_cast<int>(gkey.size())) {
      throw domain_error("binary structure: level arithmetic violated");
    }
    if (gkey.empty()) continue;
    const std::string parent_key = gkey.substr(0, gkey.size() - 1);
    const int parent = bs.nodes.at(parent_key);
    if (!ball_subset(v, parent)) {
      throw domain_error("binary structure: child ball escapes its parent");
    }
    const auto arc_it = bs.arcs.find(gkey);
    if (arc_it == bs.arcs.end()) throw domain_error("binary structure: missing connector");
    const auto& arc = arc_it->second;
    if (static_cast<int>(arc.size()) != bs.offset_m + 1 || arc.front() != parent ||
        arc.back() != v) {
      throw domain_error("binary structure: connector endpoints wrong");
    }
    for (std::size_t i = 0; i + 1 < arc.size(); ++i) {
      if (f.verts[arc[i + 1]].level != f.verts[arc[i]].level + 1) {
        throw domain_error("binary structure: connector not ascending");
      }
      const auto& nb = f.adj[arc[i]];
      if (!std::binary_search(nb.begin(), nb.end(), arc[i + 1])) {
        throw domain_error("binary structure: connector edge missing");
      }
    }
  }
  for (const auto& [gkey, v] : bs.nodes) {
    const auto sib = bs.nodes.find(gkey + "1");
    const auto self = bs.nodes.find(gkey + "0");
    if (sib == bs.nodes.end() || self == bs.nodes.end()) continue;
    if (!doubled_balls_disjoint(sp, f.verts[self->second], f.verts[sib->second])) {
      throw domain_error("binary structure: sibling doubled balls meet");
    }
  }
}

double binary_average_path_length(const BinaryStructure& bs, const EdgeGraph& g,
                                  const std::vector<double>& tau) {
  std::size_t depth = 0;
  for (const auto& kv : bs.nodes) depth = std::max(depth, kv.first.size());
  const auto edge_between = [&](int u, int v) {
    for (const auto& [w, e] : g.inc[u]) {
      if (w == v) return e;
    }
    throw precondition_error("binary_average_path_length: arc edge not in graph");
  };
  double total = 0.0;
  long long leaves = 0;
  for (const auto& kv : bs.nodes) {
    const std::string& gkey = kv.first;
    if (gkey.size() != depth) continue;
    ++leaves;
    for (std::size_t pre = 1; pre <= depth; ++pre) {
      const auto& arc = bs.arcs.at(gkey.substr(0, pre));
      for (std::size_t i = 0; i + 1 < arc.size(); ++i) {
        total += tau[edge_between(arc[i], arc[i + 1])];
      }
    }
  }
  return leaves == 0 ? 0.0 : total / static_cast<double>(leaves);
}

namespace {

double s_series(double p, int M, double tail_tol) {
  double sum = M;
  const double mexp = std::pow(static_cast<double>(M), 1.0 - 1.0 / p);
  const double ratio = std::pow(2.0, -1.0 / p);
  for (int k = 2; k <= 1000000; ++k) {
    const double base = (std::pow(2.0, k - 1) - 1.0) * M;
    sum += M * std::pow(base, -1.0 / p);
    // Remaining terms are dominated by mexp * 2^{-(j-2)/p}, j > k.
    const double tail = mexp * std::pow(2.0, -(k - 1.0) / p) / (1.0 - ratio);
    if (tail <= tail_tol) return sum + tail;
  }
  throw resource_error("s_constant: series failed to meet the tail tolerance");
}

}  // namespace

double s_constant(double p, int M, double tail_tol) {
  if (!(p > 1.0)) throw precondition_error("s_constant: p must exceed 1");
  if (M < 1) throw precondition_error("s_constant: M must be at least 1");
  if (!(tail_tol > 0.0)) throw precondition_error("s_constant: tail tolerance must be positive");
  return s_series(p, M, tail_tol);
}

double positivity_lower_bound(double p, int L, int M, bool allow_p1) {
  if (L < 1 || M < 1) throw precondition_error("positivity_lower_bound: L, M must be >= 1");
  if (!(p >= 1.0)) throw precondition_error("positivity_lower_bound: p must be >= 1");
  if (p == 1.0) {
    if (!allow_p1) {
      throw domain_error("positivity_lower_bound: p = 1 needs the explicit opt-in flag");
    }
    const double s1 = s_series(1.0, M, 1e-12);
    return 1.0 / (2.0 * s1 + 1.0 + std::log(static_cast<double>(L)));
  }
  const double s = s_constant(p, M);
  const double denom = 2.0 * s + std::pow(static_cast<double>(L), 1.0 - 1.0 / p) / (1.0 - 1.0 / p);
  return std::pow(1.0 / denom, p);
}

double line_weak_bound(double p, int L, double b) {
  if (L < 1) throw precondition_error("line_weak_bound: L must be >= 1");
  if (!(b >= 0.0)) throw precondition_error("line_weak_bound: b must be >= 0");
  if (!(p >= 1.0)) throw precondition_error("line_weak_bound: p must be >= 1");
  if (p == 1.0) return b * (1.0 + std::log(static_cast<double>(L)));
  return b * std::pow(static_cast<double>(L), 1.0 - 1.0 / p) / (1.0 - 1.0 / p);
}

std::vector<QwRow> qw_scan(const MetricSpace& sp, double s, int max_depth,
                           const std::vector<double>& p_grid,
                           const std::vector<int>& depth_grid, const CapacityQuery& q_template,
                           const SolveConfig& cfg) {
  if (p_grid.empty() || depth_grid.empty()) throw precondition_error("qw_scan: empty grid");
  for (int d : depth_grid) {
    if (d < 0 || d > max_depth) throw precondition_error("qw_scan: depth outside build range");
  }
  const Filling deep = build_filling(sp, s, max_depth);
  std::vector<QwRow> rows;
  for (double p : p_grid) {
    double prev_weak = 0.0;
    for (int d : depth_grid) {
      const Filling fd = truncate_filling(deep, d);
      CapacityQuery q = q_template;
      q.p = p;
      q.depth = d;
      QwRow row;
      row.p = p;
      row.depth = d;
      const CapacityReport rep = wcap_upper(fd, q, cfg);
      row.wcap_weak = rep.weak_value;
      row.wcap_lp = rep.lp_value;
      const WitnessReport wit = witness_certificate(fd, q);
      row.witness_weak = wit.weak_value;
      row.witness_min_path = wit.min_path;
      row.witness_admissible = wit.admissible;
      row.growth_ratio = prev_weak > 0.0 ? row.wcap_weak / prev_weak : 0.0;
      prev_weak = row.wcap_weak;
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace hypcap
