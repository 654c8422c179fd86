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

#include "hypcap/path_solver.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <tuple>

#include "hypcap/weak_norm.hpp"

namespace hypcap {

int EdgeGraph::add_edge(int u, int v) {
  const int id = static_cast<int>(edges.size());
  edges.emplace_back(u, v);
  if (static_cast<int>(inc.size()) < nodes) inc.resize(nodes);
  inc[u].emplace_back(v, id);
  inc[v].emplace_back(u, id);
  return id;
}

EdgeGraph graph_from_filling(const Filling& f) {
  EdgeGraph g;
  g.nodes = f.vertex_count();
  g.inc.resize(g.nodes);
  for (int v = 0; v < g.nodes; ++v) {
    for (int w : f.adj[v]) {
      if (v < w) g.add_edge(v, w);
    }
  }
  return g;
}

namespace {

struct QueueItem {
  double dist;
  int hops;
  int node;
  bool operator>(const QueueItem& o) const {
    return std::tie(dist, hops, node) > std::tie(o.dist, o.hops, o.node);
  }
};

struct Labels {
  std::vector<double> dist;
  std::vector<int> hops;
  std::vector<int> pred_node;
  std::vector<int> pred_edge;
  std::vector<char> settled;
};

// Shared Dijkstra core. cost(edge, to_node) gives the relaxation increment.
// Settling order is deterministic: (dist, hops, node id).
Labels dijkstra(const EdgeGraph& g, const std::vector<int>& sources,
                const std::function<double(int, int)>& step_cost,
                const std::function<double(int)>& source_cost, const std::vector<char>* targets,
                int* reached) {
  Labels lb;
  const double inf = std::numeric_limits<double>::infinity();
  lb.dist.assign(g.nodes, inf);
  lb.hops.assign(g.nodes, 0);
  lb.pred_node.assign(g.nodes, -1);
  lb.pred_edge.assign(g.nodes, -1);
  lb.settled.assign(g.nodes, 0);
  if (reached) *reached = -1;
  std::priority_queue<QueueItem, std::vector<QueueItem>, std::greater<QueueItem>> pq;
  for (int s : sources) {
    const double d0 = source_cost(s);
    if (d0 < lb.dist[s]) {
      lb.dist[s] = d0;
      lb.hops[s] = 0;
      pq.push({d0, 0, s});
    }
  }
  while (!pq.empty()) {
    const QueueItem it = pq.top();
    pq.pop();
    if (lb.settled[it.node] || it.dist != lb.dist[it.node] || it.hops != lb.hops[it.node]) {
      continue;
    }
    lb.settled[it.node] = 1;
    if (targets && (*targets)[it.node]) {
      if (reached) *reached = it.node;
      return lb;
    }
    for (const auto& [w, e] : g.inc[it.node]) {
      if (lb.settled[w]) continue;
      const double nd = it.dist + step_cost(e, w);
      const int nh = it.hops + 1;
      const bool better =
          nd < lb.dist[w] ||
          (nd == lb.dist[w] && (nh < lb.hops[w] || (nh == lb.hops[w] && it.node < lb.pred_node[w])));
      if (better) {
        lb.dist[w] = nd;
        lb.hops[w] = nh;
        lb.pred_node[w] = it.node;
        lb.pred_edge[w] = e;
        pq.push({nd, nh, w});
      }
    }
  }
  return lb;
}

PathResult reconstruct(const Labels& lb, int end) {
  PathResult res;
  if (end < 0) return res;
  res.found = true;
  res.length = lb.dist[end];
  int cur = end;
  while (cur >= 0) {
    res.nodes.push_back(cur);
    const int e = lb.pred_edge[cur];
    if (e >= 0) res.edge_ids.push_back(e);
    cur = lb.pred_node[cur];
  }
  std::reverse(res.nodes.begin(), res.nodes.end());
  std::reverse(res.edge_ids.begin(), res.edge_ids.end());
  return res;
}

void check_weights(const std::vector<double>& w, const char* what) {
  for (double v : w) {
    if (!(v >= 0.0) || !std::isfinite(v)) throw precondition_error(std::string(what) + ": weights must be finite and nonnegative");
  }
}

}  // namespace

PathResult shortest_edge_path(const EdgeGraph& g, const std::vector<double>& tau,
                              const std::vector<int>& sources,
                              const std::vector<char>& is_target) {
  if (static_cast<int>(tau.size()) != g.edge_count()) {
    throw precondition_error("shortest_edge_path: weight size mismatch");
  }
  check_weights(tau, "shortest_edge_path");
  int reached = -1;
  const Labels lb = dijkstra(
      g, sources, [&](int e, int) { return tau[e]; }, [](int) { return 0.0; }, &is_target,
      &reached);
  return reconstruct(lb, reached);
}

PathResult shortest_node_path(const EdgeGraph& g, const std::vector<double>& node_cost,
                              const std::vector<int>& sources,
                              const std::vector<char>& is_target) {
  if (static_cast<int>(node_cost.size()) != g.nodes) {
    throw precondition_error("shortest_node_path: weight size mismatch");
  }
  check_weights(node_cost, "shortest_node_path");
  int reached = -1;
  const Labels lb = dijkstra(
      g, sources, [&](int, int w) { return node_cost[w]; },
      [&](int s) { return node_cost[s]; }, &is_target, &reached);
  PathResult res = reconstruct(lb, reached);
  res.edge_ids.clear();
  return res;
}

double PathConstraint::evaluate(const std::vector<double>& tau) const {
  double acc = 0.0;
  for (std::size_t i = 0; i < support.size(); ++i) {
    acc += (coeff.empty() ? 1.0 : coeff[i]) * tau[support[i]];
  }
  return acc;
}

RestrictedSolution solve_restricted(int nvars, const std::vector<double>& obj_weight, double p,
                                    const std::vector<PathConstraint>& cons, double inner_tol,
                                    long long max_iters, std::vector<double> warm_lambda) {
  if (!(p > 1.0) || p > 16.0) throw precondition_error("solve_restricted: p must lie in (1, 16]");
  if (static_cast<int>(obj_weight.size()) != nvars) {
    throw precondition_error("solve_restricted: objective weight size mismatch");
  }
  const std::size_t m = cons.size();
  // Local variable set: union of constraint supports. Everything else is 0.
  std::vector<int> vars;
  for (const auto& c : cons) {
    if (c.support.empty()) throw precondition_error("solve_restricted: empty constraint support");
    if (!(c.bound > 0.0)) throw precondition_error("solve_restricted: bound must be positive");
    for (int v : c.support) {
      if (v < 0 || v >= nvars) throw precondition_error("solve_restricted: support out of range");
      vars.push_back(v);
    }
  }
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  const std::size_t nl = vars.size();
  std::vector<int> local_of(nvars, -1);
  for (std::size_t i = 0; i < nl; ++i) local_of[vars[i]] = static_cast<int>(i);
  std::vector<double> mw(nl);
  for (std::size_t i = 0; i < nl; ++i) {
    mw[i] = obj_weight[vars[i]];
    if (!(mw[i] > 0.0)) {
      throw precondition_error("solve_restricted: objective weight must be positive on support");
    }
  }
  // Normalized sparse rows: sum coeff * tau >= 1.
  std::vector<std::vector<std::pair<int, double>>> rows(m);
  for (std::size_t gi = 0; gi < m; ++gi) {
    const auto& c = cons[gi];
    std::vector<double> acc(nl, 0.0);
    for (std::size_t i = 0; i < c.support.size(); ++i) {
      acc[local_of[c.support[i]]] += (c.coeff.empty() ? 1.0 : c.coeff[i]) / c.bound;
    }
    for (std::size_t i = 0; i < nl; ++i) {
      if (acc[i] != 0.0) rows[gi].emplace_back(static_cast<int>(i), acc[i]);
    }
  }

  const double q = p / (p - 1.0);
  const double inv_pm1 = 1.0 / (p - 1.0);
  std::vector<double> lambda(m, 0.0);
  for (std::size_t i = 0; i < std::min(warm_lambda.size(), m); ++i) lambda[i] = std::max(0.0, warm_lambda[i]);

  std::vector<double> sigma(nl), tau(nl), grad(m), cand(m), sigma_c(nl);
  const auto compute_sigma = [&](const std::vector<double>& lam, std::vector<double>& sig) {
    std::fill(sig.begin(), sig.end(), 0.0);
    for (std::size_t gi = 0; gi < m; ++gi) {
      const double l = lam[gi];
      if (l == 0.0) continue;
      for (const auto& [i, c] : rows[gi]) sig[i] += l * c;
    }
  };
  const auto tau_of_sigma = [&](const std::vector<double>& sig, std::vector<double>& t) {
    for (std::size_t i = 0; i < nl; ++i) {
      const double s = sig[i] / (p * mw[i]);
      if (s <= 0.0) {
        t[i] = 0.0;
      } else if (p == 2.0) {
        t[i] = s;
      } else {
        t[i] = std::pow(s, inv_pm1);
      }
    }
  };
  const auto dual_value = [&](const std::vector<double>& lam, const std::vector<double>& sig) {
    double sum_l = 0.0;
    for (double l : lam) sum_l += l;
    double pen = 0.0;
    for (std::size_t i = 0; i < nl; ++i) {
      const double s = sig[i] / (p * mw[i]);
      if (s > 0.0) pen += mw[i] * (p == 2.0 ? s * s : std::pow(s, q));
    }
    return sum_l - (p - 1.0) * pen;
  };
  const auto primal_of = [&](const std::vector<double>& t) {
    double acc = 0.0;
    for (std::size_t i = 0; i < nl; ++i) {
      acc += mw[i] * (p == 2.0 ? t[i] * t[i] : std::pow(t[i], p));
    }
    return acc;
  };

  RestrictedSolution out;
  out.tau.assign(nvars, 0.0);
  double best_primal = std::numeric_limits<double>::infinity();
  std::vector<double> best_tau(nl, 0.0);
  double step = 1.0;
  compute_sigma(lambda, sigma);
  double g_cur = dual_value(lambda, sigma);

  bool rows_nonneg = true;
  for (const auto& r : rows) {
    for (const auto& [i, c] : r) {
      if (c < 0.0) rows_nonneg = false;
    }
  }
  // Updates the best feasible recovery from the current sigma, refreshes the
  // ascent gradient on the way, and reports the duality-gap certificate.
  const auto certified = [&]() {
    tau_of_sigma(sigma, tau);
    double rho = std::numeric_limits<double>::infinity();
    for (std::size_t gi = 0; gi < m; ++gi) {
      double v = 0.0;
      for (const auto& [i, c] : rows[gi]) v += c * tau[i];
      rho = std::min(rho, v);
      grad[gi] = 1.0 - v;
    }
    if (rho > 0.0) {
      const double scale = 1.0 / rho;
      const double f_feas = primal_of(tau) * (p == 2.0 ? scale * scale : std::pow(scale, p));
      if (f_feas < best_primal) {
        best_primal = f_feas;
        for (std::size_t i = 0; i < nl; ++i) best_tau[i] = tau[i] * scale;
      }
    }
    if (!std::isfinite(best_primal)) return false;  // no feasible recovery yet
    return best_primal - g_cur <= inner_tol * std::max(1.0, best_primal);
  };
  // Exact 1-d dual ascent along one multiplier: the concave section peaks
  // where the row value under tau(sigma) reaches 1; bracketed bisection.
  const auto row_value = [&](std::size_t gi, double delta) {
    double v = 0.0;
    for (const auto& [i, c] : rows[gi]) {
      const double s = (sigma[i] + delta * c) / (p * mw[i]);
      if (s > 0.0) v += c * (p == 2.0 ? s : std::pow(s, inv_pm1));
    }
    return v;
  };

  long long it = 0;
  bool done = m == 0;
  double prev_gap = std::numeric_limits<double>::infinity();
  int slow_passes = 0;
  while (!done && it < max_iters) {
    // Phase 1: projected gradient with backtracking, a block at a time. The
    // shared step moves every multiplier and handles the global geometry.
    bool stalled = false;
    const long long block_end = std::min(max_iters, it + 200);
    for (; it < block_end; ++it) {
      if (certified()) {
        done = true;
        break;
      }
      bool accepted = false;
      for (int half = 0; half < 60; ++half) {
        double dir_dot = 0.0;
        for (std::size_t gi = 0; gi < m; ++gi) {
          cand[gi] = std::max(0.0, lambda[gi] + step * grad[gi]);
          dir_dot += grad[gi] * (cand[gi] - lambda[gi]);
        }
        compute_sigma(cand, sigma_c);
        const double g_new = dual_value(cand, sigma_c);
        if (dir_dot <= 0.0) break;  // projected gradient vanished
        if (g_new >= g_cur + 0.1 * dir_dot - 1e-15) {
          lambda.swap(cand);
          sigma.swap(sigma_c);
          g_cur = g_new;
          step = std::min(step * 1.3, 1e12);
          accepted = true;
          break;
        }
        step *= 0.5;
      }
      if (!accepted) {
        stalled = true;
        break;
      }
    }
    if (done) break;
    if (!rows_nonneg) {
      if (stalled) break;  // no second engine for signed rows
      continue;
    }
    // Phase 2: one Gauss-Seidel sweep of exact per-row ascent. Monotone in
    // the dual and immune to the shared-step conditioning.
    double moved = 0.0;
    for (std::size_t gi = 0; gi < m; ++gi) {
      if (rows[gi].empty()) continue;
      const double v0 = row_value(gi, 0.0);
      double delta = 0.0;
      if (v0 < 1.0) {
        double hi = 1.0;
        while (row_value(gi, hi) < 1.0 && hi < 1e18) hi *= 2.0;
        double lo = 0.0;
        for (int b = 0; b < 80 && hi - lo > 1e-15 * std::max(1.0, hi); ++b) {
          const double mid = 0.5 * (lo + hi);
          (row_value(gi, mid) < 1.0 ? lo : hi) = mid;
        }
        delta = 0.5 * (lo + hi);
      } else if (v0 > 1.0) {
        const double floor_d = -lambda[gi];
        if (row_value(gi, floor_d) >= 1.0) {
          delta = floor_d;  // optimum clipped at lambda = 0
        } else {
          double lo = floor_d, hi = 0.0;
          for (int b = 0; b < 80 && hi - lo > 1e-15 * std::max(1.0, -lo); ++b) {
            const double mid = 0.5 * (lo + hi);
            (row_value(gi, mid) < 1.0 ? lo : hi) = mid;
          }
          delta = 0.5 * (lo + hi);
        }
      }
      if (delta != 0.0) {
        lambda[gi] += delta;
        for (const auto& [i, c] : rows[gi]) sigma[i] += delta * c;
        moved += std::abs(delta);
      }
    }
    compute_sigma(lambda, sigma);  // kill incremental drift
    g_cur = dual_value(lambda, sigma);
    it += 4 * static_cast<long long>(m);  // sweep work in step units
    if (certified()) break;
    if (stalled && moved <= 1e-17 * static_cast<double>(m)) break;  // both engines dead
    // A tail contracting slower than 0.999 per pass will not close the gap
    // within any sane budget; cut the loss.
    const double gap = best_primal - g_cur;
    slow_passes = (gap > 0.999 * prev_gap) ? slow_passes + 1 : 0;
    if (slow_passes >= 20) break;
    prev_gap = gap;
  }
  out.iters = it;
  out.dual = g_cur;
  out.primal = best_primal;
  out.lambda = lambda;
  for (std::size_t i = 0; i < nl; ++i) out.tau[vars[i]] = best_tau[i];
  return out;
}

SolveResult minimize_lp_subject_to_paths(int nvars, const std::vector<double>& obj_weight,
                                         const SolveConfig& cfg,
                                         const MultiViolationOracle& oracle) {
  SolveResult res;
  res.tau.assign(nvars, 0.0);
  std::vector<double> warm;
  double gap = 0.0;
  bool tight = false;
  const auto resolve = [&](double tol) {
    RestrictedSolution rs = solve_restricted(nvars, obj_weight, cfg.p, res.generated, tol,
                                             cfg.max_inner_iters, warm);
    warm = rs.lambda;
    gap = rs.primal - rs.dual;
    res.tau = std::move(rs.tau);
    // Exact feasibility on the generated set; keeps the oracle progressing.
    double rho = std::numeric_limits<double>::infinity();
    for (const auto& c : res.generated) rho = std::min(rho, c.evaluate(res.tau) / c.bound);
    if (rho > 0.0 && std::isfinite(rho) && rho != 1.0) {
      for (double& t : res.tau) t /= rho;
    }
  };
  while (true) {
    std::vector<std::pair<double, PathConstraint>> batch = oracle(res.tau);
    ++res.oracle_calls;
    if (batch.empty()) throw precondition_error("constraint generation: empty oracle batch");
    const double value = batch.front().first;
    if (value >= 1.0 - cfg.outer_tol) {
      if (!tight && !res.generated.empty()) {
        // Feasibility was certified against a loosely solved tau; redo the
        // last restricted solve at full accuracy before trusting the value.
        resolve(cfg.inner_tol);
        tight = true;
        continue;
      }
      res.feasible = true;
      break;
    }
    if (static_cast<int>(res.generated.size()) >= cfg.max_constraints) {
      break;  // budget exhausted; caller sees feasible = false
    }
    for (auto& [v, con] : batch) {
      if (static_cast<int>(res.generated.size()) >= cfg.max_constraints) break;
      if (v >= 1.0 - cfg.outer_tol) continue;  // only strictly violated cuts
      res.generated.push_back(std::move(con));
      warm.push_back(0.0);
    }
    tight = false;
    // Inexact inner solves: accuracy proportional to the current infeasibility
    // keeps early iterations cheap and tightens to cfg.inner_tol at the end.
    resolve(std::max(cfg.inner_tol, std::min(1e-2, 0.3 * (1.0 - value))));
    // Drop strictly slack zero-multiplier rows; the oracle brings any of them
    // back if they ever bind again. Keeps the working set near the basis.
    if (res.generated.size() > 64) {
      std::size_t w = 0;
      for (std::size_t g = 0; g < res.generated.size(); ++g) {
        const bool keep = warm[g] > 0.0 ||
                          res.generated[g].evaluate(res.tau) / res.generated[g].bound <= 1.05;
        if (keep) {
          if (w != g) {
            res.generated[w] = std::move(res.generated[g]);
            warm[w] = warm[g];
          }
          ++w;
        }
      }
      res.generated.resize(w);
      warm.resize(w);
    }
  }
  res.constraints = static_cast<int>(res.generated.size());
  res.duality_gap = gap;
  res.lp_value = 0.0;
  for (int i = 0; i < nvars; ++i) {
    res.lp_value += obj_weight[i] * std::pow(res.tau[i], cfg.p);
  }
  res.weak_value = std::pow(weak_lp_norm(res.tau, cfg.p), cfg.p);
  return res;
}

SolveResult minimize_lp_subject_to_paths(int nvars, const std::vector<double>& obj_weight,
                                         const SolveConfig& cfg, const ViolationOracle& oracle) {
  const MultiViolationOracle one = [&](const std::vector<double>& tau) {
    std::vector<std::pair<double, PathConstraint>> batch;
    batch.push_back(oracle(tau));
    return batch;
  };
  return minimize_lp_subject_to_paths(nvars, obj_weight, cfg, one);
}

MultiViolationOracle peel_path_cuts(const ViolationOracle& oracle, int cuts, double outer_tol) {
  if (cuts < 1) throw precondition_error("peel_path_cuts: need at least one cut");
  return [oracle, cuts, outer_tol](const std::vector<double>& tau) {
    std::vector<std::pair<double, PathConstraint>> out;
    std::vector<double> bumped = tau;
    std::vector<std::vector<std::pair<int, double>>> seen;
    for (int c = 0; c < cuts; ++c) {
      auto [val, con] = oracle(c == 0 ? tau : bumped);
      if (c == 0) {
        if (!(std::isfinite(val)) || val >= 1.0 - outer_tol) {
          out.emplace_back(val, std::move(con));
          return out;
        }
      } else {
        // Peeled searches run on bumped weights; score against the real ones.
        val = con.evaluate(tau) / con.bound;
        if (!(val < 1.0 - outer_tol)) break;
      }
      std::vector<std::pair<int, double>> key;
      for (std::size_t i = 0; i < con.support.size(); ++i) {
        key.emplace_back(con.support[i], con.coeff.empty() ? 1.0 : con.coeff[i]);
      }
      std::sort(key.begin(), key.end());
      bool dup = false;
      for (const auto& k : seen) dup = dup || k == key;
      if (dup) break;
      seen.push_back(std::move(key));
      // Raise the found route by about twice its bound so the next search
      // must leave it; coefficient mass converts the additive step.
      double mass = 0.0;
      for (std::size_t i = 0; i < con.support.size(); ++i) {
        mass += con.coeff.empty() ? 1.0 : con.coeff[i];
      }
      const double step = 2.0 * con.bound / std::max(mass, 1e-12);
      for (int id : con.support) bumped[id] += step;
      out.emplace_back(val, std::move(con));
    }
    return out;
  };
}

namespace {

std::vector<double> dijkstra_all_edge(const EdgeGraph& g, const std::vector<double>& tau,
                                      const std::vector<int>& sources) {
  const Labels lb = dijkstra(
      g, sources, [&](int e, int) { return tau[e]; }, [](int) { return 0.0; }, nullptr, nullptr);
  return lb.dist;
}

}  // namespace

int weak_norm_polish_edges(const EdgeGraph& g, std::vector<double>& tau, double p,
                           const std::vector<int>& sources, const std::vector<char>& is_target,
                           double tol, int max_passes) {
  (void)p;
  std::vector<int> targets;
  for (int v = 0; v < g.nodes; ++v) {
    if (is_target[v]) targets.push_back(v);
  }
  const auto verify = [&]() {
    const PathResult pr = shortest_edge_path(g, tau, sources, is_target);
    return !pr.found || pr.length >= 1.0 - 1e-9;
  };
  if (!verify()) return 0;
  int accepted = 0;
  for (int pass = 0; pass < max_passes; ++pass) {
    bool any = false;
    std::vector<double> d_from = dijkstra_all_edge(g, tau, sources);
    std::vector<double> d_to = dijkstra_all_edge(g, tau, targets);
    // Largest weights first: those drive the weak norm.
    std::vector<int> order;
    for (int e = 0; e < g.edge_count(); ++e) {
      if (tau[e] > tol) order.push_back(e);
    }
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (tau[a] != tau[b]) return tau[a] > tau[b];
      return a < b;
    });
    for (int e : order) {
      const auto [u, v] = g.edges[e];
      const double through = std::min(d_from[u] + tau[e] + d_to[v], d_from[v] + tau[e] + d_to[u]);
      const double slack = through - 1.0;
      if (!(slack > tol)) continue;
      const double old = tau[e];
      tau[e] = std::max(0.0, old - slack);
      if (!verify()) {
        tau[e] = old;
        continue;
      }
      ++accepted;
      any = true;
      d_from = dijkstra_all_edge(g, tau, sources);
      d_to = dijkstra_all_edge(g, tau, targets);
    }
    if (!any) break;
  }
  return accepted;
}

int weak_norm_polish_generic(std::vector<double>& tau, double p, const ViolationOracle& oracle,
                             double tol, int max_moves) {
  int moves = 0;
  double value = oracle(tau).first;
  if (!std::isfinite(value)) return 0;  // no constraining path; tau = 0 is optimal
  if (!(value > 0.0)) return 0;         // cannot reach admissibility by scaling
  // Exact scaling to the admissibility boundary (up or down).
  if (std::abs(value - 1.0) > 1e-15) {
    for (double& t : tau) t /= value;
    ++moves;
    value = oracle(tau).first;
  }
  if (value < 1.0 - 10.0 * tol) return moves;
  double guard = weak_lp_norm(tau, p);
  while (moves < max_moves) {
    // Clip the top level down to the next distinct value.
    double top = 0.0, next = 0.0;
    for (double t : tau) {
      if (t > top) {
        next = top;
        top = t;
      } else if (t < top && t > next) {
        next = t;
      }
    }
    if (!(top > tol)) break;
    std::vector<double> trial = tau;
    const double clip = std::max(next, top * 0.5);
    for (double& t : trial) t = std::min(t, clip);
    const double tv = oracle(trial).first;
    if (tv >= 1.0 - tol) {
      tau.swap(trial);
      ++moves;
      const double now = weak_lp_norm(tau, p);
      if (now > guard + 1e-12) throw domain_error("polish must not raise the weak norm");
      guard = now;
    } else {
      break;
    }
  }
  return moves;
}

}  // namespace hypcap
