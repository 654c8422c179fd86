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

#include "hypcap/covering.hpp"

#include <algorithm>
#include <cmath>

#include "hypcap/parallel.hpp"
#include "hypcap/weak_norm.hpp"

namespace hypcap {

SampledCurve make_curve(const MetricSpace& sp, const std::vector<int>& point_ids) {
  if (point_ids.empty()) throw precondition_error("make_curve: no samples");
  for (int id : point_ids) {
    if (id < 0 || id >= static_cast<int>(sp.size())) {
      throw precondition_error("make_curve: sample out of range");
    }
  }
  SampledCurve c;
  c.samples = point_ids;
  c.cum_length.assign(point_ids.size(), 0.0);
  for (std::size_t i = 1; i < point_ids.size(); ++i) {
    const double step = sp.dist(point_ids[i - 1], point_ids[i]);
    c.cum_length[i] = c.cum_length[i - 1] + step;
    c.sample_mesh = std::max(c.sample_mesh, step);
  }
  c.total_length = c.cum_length.back();
  return c;
}

SampledCurve densify_curve(const MetricSpace& sp, const SampledCurve& c, double target_mesh) {
  if (!(target_mesh > 0.0)) throw precondition_error("densify_curve: bad target mesh");
  std::vector<int> pts = c.samples;
  bool changed = true;
  int rounds = 0;
  while (changed && rounds < 32) {
    changed = false;
    ++rounds;
    std::vector<int> next;
    next.push_back(pts[0]);
    for (std::size_t i = 1; i < pts.size(); ++i) {
      const int a = pts[i - 1], b = pts[i];
      const double gap = sp.dist(a, b);
      if (gap > target_mesh) {
        // Space point nearest the Euclidean midpoint of the segment.
        const double mx = 0.5 * (sp.x[a] + sp.x[b]);
        const double my = sp.dim == 1 ? 0.0 : 0.5 * (sp.y[a] + sp.y[b]);
        int best = -1;
        double best_d = std::numeric_limits<double>::infinity();
        for (std::size_t q = 0; q < sp.size(); ++q) {
          const double dx = sp.x[q] - mx;
          const double dy = sp.dim == 1 ? 0.0 : sp.y[q] - my;
          const double d = dx * dx + dy * dy;
          if (d < best_d) {
            best_d = d;
            best = static_cast<int>(q);
          }
        }
        if (best >= 0 && best != a && best != b &&
            std::max(sp.dist(a, best), sp.dist(best, b)) < gap) {
          next.push_back(best);
          changed = true;
        }
      }
      next.push_back(b);
    }
    pts = std::move(next);
  }
  return make_curve(sp, pts);
}

std::vector<Cover> level_covers(const Filling& f, const std::vector<int>& n_list) {
  std::vector<Cover> out;
  for (int n : n_list) {
    if (n < 0 || n > f.max_level) throw precondition_error("level_covers: level out of range");
    Cover c;
    c.label = "level";
    c.param = n;
    for (int v = f.level_begin[n]; v < f.level_begin[n + 1]; ++v) c.vertices.push_back(v);
    out.push_back(std::move(c));
  }
  return out;
}

Cover band_cover(const Filling& f, int j) {
  if (j < 0) throw precondition_error("band_cover: negative band");
  if (2 * j > f.max_level) throw depth_error("band_cover: band exceeds the filling depth");
  Cover c;
  c.label = "band";
  c.param = j;
  for (int lv = j; lv <= 2 * j; ++lv) {
    for (int v = f.level_begin[lv]; v < f.level_begin[lv + 1]; ++v) c.vertices.push_back(v);
  }
  return c;
}

bool cover_covers_space(const Filling& f, const Cover& c) {
  const MetricSpace& sp = *f.space;
  const double miss = par::max_terms(static_cast<long long>(sp.size()), 0.0, [&](long long i) {
    for (int v : c.vertices) {
      if (sp.dist(static_cast<int>(i), f.verts[v].center) <= f.verts[v].radius + kBallSlack) {
        return 0.0;
      }
    }
    return 1.0;
  });
  return miss == 0.0;
}

std::vector<Cover> canonical_level_family(const Filling& f) {
  std::vector<int> ns;
  for (int n = 1; n <= f.max_level; ++n) ns.push_back(n);
  return level_covers(f, ns);
}

std::vector<Cover> canonical_band_family(const Filling& f) {
  std::vector<Cover> out;
  for (int j = 1; 2 * j <= f.max_level; ++j) out.push_back(band_cover(f, j));
  return out;
}

namespace {

// Transition out of breakpoint state i: pay tau[ball], land on state next.
struct Hop {
  int ball;
  int next;
};

// Per start-sample transitions for one (curve, cover) pair. Blocks share
// their endpoint sample, so a hop from i covers samples i..next.
struct Plan {
  int n = 0;
  std::vector<std::vector<Hop>> hops;  // indexed by state
  std::vector<std::vector<int>> containing;  // balls whose shrunk ball holds sample i
};

Plan build_plan(const Filling& f, const SampledCurve& c, const Cover& cover) {
  const MetricSpace& sp = *f.space;
  Plan plan;
  plan.n = static_cast<int>(c.samples.size());
  plan.hops.assign(plan.n, {});
  plan.containing.assign(plan.n, {});
  std::vector<char> member(plan.n);
  for (int v : cover.vertices) {
    const double shrunk = f.verts[v].radius - c.sample_mesh;
    if (shrunk <= 0.0) continue;
    bool any = false;
    for (int i = 0; i < plan.n; ++i) {
      member[i] = sp.dist(c.samples[i], f.verts[v].center) <= shrunk + kBallSlack;
      any |= member[i];
    }
    if (!any) continue;
    for (int i = 0; i < plan.n; ++i) {
      if (!member[i]) continue;
      int reach = i;
      while (reach + 1 < plan.n && member[reach + 1]) ++reach;
      // A block may start anywhere inside the run; its farthest end is fixed.
      for (int k = i; k <= reach; ++k) {
        plan.containing[k].push_back(v);
        if (reach > k) plan.hops[k].push_back({v, reach});
      }
      i = reach;
    }
  }
  for (int i = 0; i < plan.n; ++i) {
    if (plan.containing[i].empty()) {
      throw margin_error("projection: a sample escapes every shrunk cover ball");
    }
  }
  return plan;
}

std::pair<double, Projection> dp_min_projection(const Plan& plan,
                                                const std::vector<double>& tau) {
  const double inf = std::numeric_limits<double>::infinity();
  Projection proj;
  if (plan.n == 1) {
    // Constant curve: one block, cheapest containing ball.
    double best = inf;
    int ball = -1;
    for (int v : plan.containing[0]) {
      if (tau[v] < best) {
        best = tau[v];
        ball = v;
      }
    }
    proj.breakpoints = {0, 0};
    proj.balls = {ball};
    return {best, proj};
  }
  std::vector<double> dist(plan.n, inf);
  std::vector<int> pred_state(plan.n, -1), pred_ball(plan.n, -1);
  for (const Hop& h : plan.hops[0]) {
    if (tau[h.ball] < dist[h.next]) {
      dist[h.next] = tau[h.ball];
      pred_state[h.next] = 0;
      pred_ball[h.next] = h.ball;
    }
  }
  for (int i = 1; i < plan.n; ++i) {
    if (dist[i] == inf) continue;
    for (const Hop& h : plan.hops[i]) {
      const double cand = dist[i] + tau[h.ball];
      if (cand < dist[h.next]) {
        dist[h.next] = cand;
        pred_state[h.next] = i;
        pred_ball[h.next] = h.ball;
      }
    }
  }
  const int last = plan.n - 1;
  if (dist[last] == inf) {
    throw margin_error("projection: no block partition advances across the samples");
  }
  int cur = last;
  while (cur > 0) {
    proj.balls.push_back(pred_ball[cur]);
    proj.breakpoints.push_back(cur);
    cur = pred_state[cur];
  }
  proj.breakpoints.push_back(0);
  std::reverse(proj.balls.begin(), proj.balls.end());
  std::reverse(proj.breakpoints.begin(), proj.breakpoints.end());
  return {dist[last], proj};
}

}  // namespace

std::pair<double, Projection> min_projection_length(const Filling& f, const SampledCurve& c,
                                                    const Cover& cover,
                                                    const std::vector<double>& tau_vertex) {
  if (c.samples.empty()) throw precondition_error("min_projection_length: empty curve");
  for (int v : cover.vertices) {
    if (tau_vertex[v] < 0.0) throw precondition_error("min_projection_length: negative weight");
  }
  const Plan plan = build_plan(f, c, cover);
  return dp_min_projection(plan, tau_vertex);
}

double min_projection_exhaustive(const Filling& f, const SampledCurve& c, const Cover& cover,
                                 const std::vector<double>& tau_vertex) {
  if (c.samples.size() > 30) {
    throw precondition_error("min_projection_exhaustive: curve too long for enumeration");
  }
  const Plan plan = build_plan(f, c, cover);
  const double inf = std::numeric_limits<double>::infinity();
  if (plan.n == 1) {
    double best = inf;
    for (int v : plan.containing[0]) best = std::min(best, tau_vertex[v]);
    return best;
  }
  long long budget = 10000000;
  // Minimal cost over all strict block partitions, any reach allowed.
  const auto rec = [&](const auto& self, int i) -> double {
    if (--budget < 0) throw resource_error("min_projection_exhaustive: enumeration blown");
    double best = inf;
    for (const Hop& h : plan.hops[i]) {
      for (int j = i + 1; j <= h.next; ++j) {
        const double tail = j == plan.n - 1 ? 0.0 : self(self, j);
        best = std::min(best, tau_vertex[h.ball] + tail);
      }
    }
    return best;
  };
  const double value = rec(rec, 0);
  if (value == inf) {
    throw margin_error("projection: no block partition advances across the samples");
  }
  return value;
}

bool is_admissible_covering(const Filling& f, const std::vector<double>& tau_vertex,
                            const SampledCurve& c, const std::vector<Cover>& covers, double tol) {
  if (covers.empty()) return false;
  std::vector<double> vals;
  vals.reserve(covers.size());
  for (const Cover& cv : covers) {
    vals.push_back(min_projection_length(f, c, cv, tau_vertex).first);
  }
  int start = -1;
  for (std::size_t i = 0; i + 1 < vals.size(); ++i) {
    if (vals[i] >= 1.0 - tol && vals[i + 1] >= 1.0 - tol) {
      start = static_cast<int>(i);
      break;
    }
  }
  if (start < 0) {
    return vals.size() == 1 && vals[0] >= 1.0 - tol;
  }
  for (std::size_t i = start; i < vals.size(); ++i) {
    if (vals[i] < 1.0 - tol) return false;
  }
  return true;
}

std::vector<double> tau_epsilon(const Filling& f, double eps) {
  if (!(eps > 0.0)) throw precondition_error("tau_epsilon: eps must be positive");
  std::vector<double> tau(f.vertex_count());
  for (int v = 0; v < f.vertex_count(); ++v) tau[v] = f.verts[v].radius * eps;
  return tau;
}

CapacityReport wccap_upper(const Filling& f, const std::vector<SampledCurve>& curves, double p,
                           const SolveConfig& cfg) {
  if (curves.empty()) throw precondition_error("wccap_upper: empty curve family");
  if (!(p > 1.0) || p > 16.0) throw precondition_error("wccap_upper: p out of range");
  std::vector<Cover> covers = canonical_level_family(f);
  {
    std::vector<Cover> bands = canonical_band_family(f);
    covers.insert(covers.end(), bands.begin(), bands.end());
  }
  if (covers.empty()) throw depth_error("wccap_upper: filling too shallow for any cover");
  // Transition plans are tau-independent; build them once.
  std::vector<std::vector<Plan>> plans(covers.size());
  for (std::size_t ci = 0; ci < covers.size(); ++ci) {
    plans[ci].reserve(curves.size());
    for (const SampledCurve& cu : curves) {
      plans[ci].push_back(build_plan(f, cu, covers[ci]));
    }
  }
  const ViolationOracle oracle = [&](const std::vector<double>& tau) {
    double best = std::numeric_limits<double>::infinity();
    Projection best_proj;
    for (std::size_t ci = 0; ci < covers.size(); ++ci) {
      for (std::size_t qi = 0; qi < curves.size(); ++qi) {
        auto [val, proj] = dp_min_projection(plans[ci][qi], tau);
        if (val < best) {
          best = val;
          best_proj = std::move(proj);
        }
      }
    }
    PathConstraint con;
    con.support = best_proj.balls;
    con.bound = 1.0;
    return std::make_pair(best, con);
  };
  SolveConfig sc = cfg;
  sc.p = p;
  const std::vector<double> ones(f.vertex_count(), 1.0);
  SolveResult sr = minimize_lp_subject_to_paths(f.vertex_count(), ones, sc, oracle);
  CapacityReport rep;
  rep.p = p;
  rep.depth = f.max_level;
  rep.tau = std::move(sr.tau);
  rep.constraints = sr.constraints;
  rep.oracle_calls = sr.oracle_calls;
  rep.duality_gap = sr.duality_gap;
  if (!sr.feasible) rep.status = "iteration-limit";
  rep.polish_moves = weak_norm_polish_generic(rep.tau, p, oracle, sc.outer_tol);

  const std::vector<Cover> levels = canonical_level_family(f);
  const std::vector<Cover> bands = canonical_band_family(f);
  const double tol = sc.outer_tol + 1e-9;
  for (const SampledCurve& cu : curves) {
    const bool lv = is_admissible_covering(f, rep.tau, cu, levels, tol);
    const bool bd = bands.empty() || is_admissible_covering(f, rep.tau, cu, bands, tol);
    if (!lv && !bd) {
      rep.status = "inadmissible";
      break;
    }
    if (lv != bd && rep.status == "ok") rep.status = "cover-family-mismatch";
  }
  rep.lp_value = 0.0;
  for (double t : rep.tau) rep.lp_value += std::pow(t, p);
  rep.weak_value = std::pow(weak_lp_norm(rep.tau, p), p);
  return rep;
}

std::vector<double> sigma_n_projection(const std::vector<double>& tau_vertex, const Filling& f,
                                       int n) {
  if (n < 0 || n > f.max_level) throw precondition_error("sigma_n_projection: bad level");
  const MetricSpace& sp = *f.space;
  std::vector<double> sigma(sp.size(), 0.0);
  par::for_each_index(static_cast<long long>(sp.size()), [&](long long xi) {
    const int x = static_cast<int>(xi);
    double acc = 0.0;
    for (int v = f.level_begin[n]; v < f.level_begin[n + 1]; ++v) {
      if (sp.dist(x, f.verts[v].center) <= 2.0 * f.verts[v].radius + kBallSlack) {
        acc += tau_vertex[v] / f.verts[v].radius;
      }
    }
    sigma[x] = 2.0 * acc;
  });
  return sigma;
}

std::vector<double> lift_density_to_vertices(const std::vector<double>& rho, const Filling& f,
                                             double p, double K) {
  if (!(p > 1.0)) throw precondition_error("lift_density_to_vertices: p must exceed 1");
  if (!(K >= 1.0)) throw precondition_error("lift_density_to_vertices: K must be >= 1");
  const MetricSpace& sp = *f.space;
  if (rho.size() != sp.size()) {
    throw precondition_error("lift_density_to_vertices: density size mismatch");
  }
  std::vector<double> tau(f.vertex_count(), 0.0);
  par::for_each_index(f.vertex_count(), [&](long long vi) {
    const FillVertex& fv = f.verts[vi];
    const double radius = std::min(K * fv.radius, sp.diameter);
    double mass = 0.0, acc = 0.0;
    for (std::size_t x = 0; x < sp.size(); ++x) {
      if (sp.dist(static_cast<int>(x), fv.center) <= radius + kBallSlack) {
        mass += sp.weight[x];
        acc += sp.weight[x] * std::pow(rho[x], p);
      }
    }
    // No throwing from a parallel body; flag and check after the loop.
    tau[vi] = mass > 0.0 ? fv.radius * std::pow(acc / mass, 1.0 / p)
                         : std::numeric_limits<double>::quiet_NaN();
  });
  for (double t : tau) {
    if (!std::isfinite(t)) throw resolution_error("lift_density_to_vertices: empty ball");
  }
  return tau;
}

}  // namespace hypcap
