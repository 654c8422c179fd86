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
#include <random>
#include <vector>

#include "hypcap/core.hpp"
#include "hypcap/covering.hpp"
#include "hypcap/filling.hpp"
#include "hypcap/metric_space.hpp"

using namespace hypcap;

static int failures = 0;

static void check(bool ok, const char* what) {
  std::printf("%s %s\n", ok ? "ok  " : "FAIL", what);
  if (!ok) ++failures;
}

// Grid point id on an n x n square built row-major.
static int gid(int n, int col, int row) { return row * n + col; }

int main() {
  const int n = 12;
  MetricSpace sq = build_square(n);
  Filling f = build_filling(sq, 2.0, 3);

  // Curve bookkeeping: lengths accumulate, the mesh is the largest step, and
  // reversal preserves both.
  std::vector<int> row_ids, col_ids;
  for (int c = 0; c < n; ++c) row_ids.push_back(gid(n, c, n / 2));
  for (int r = 0; r < n; ++r) col_ids.push_back(gid(n, n / 2, r));
  SampledCurve row = make_curve(sq, row_ids);
  {
    check(std::abs(row.total_length - sq.metric_of(1.0)) < 1e-12,
          "straight row has the grid's side length");
    check(std::abs(row.sample_mesh - sq.metric_of(1.0 / (n - 1.0))) < 1e-15,
          "row mesh is one grid step");
    bool mono = true;
    for (std::size_t i = 1; i < row.cum_length.size(); ++i) {
      mono = mono && row.cum_length[i] >= row.cum_length[i - 1];
    }
    check(mono && row.cum_length.front() == 0.0, "cumulative lengths start at zero and rise");
    std::vector<int> rev = row_ids;
    std::reverse(rev.begin(), rev.end());
    const SampledCurve back = make_curve(sq, rev);
    check(std::abs(back.total_length - row.total_length) < 1e-15 &&
              std::abs(back.sample_mesh - row.sample_mesh) < 1e-15,
          "reversal preserves length and mesh");
    check(make_curve(sq, {3}).total_length == 0.0, "a single sample has zero length");
  }

  // Densifying a decimated row recovers the skipped grid points.
  {
    std::vector<int> sparse;
    for (int c = 0; c < n; c += 2) sparse.push_back(gid(n, c, n / 2));
    const SampledCurve coarse = make_curve(sq, sparse);
    const SampledCurve fine = densify_curve(sq, coarse, sq.mesh * 1.5);
    check(fine.sample_mesh < coarse.sample_mesh - 1e-15, "densify shrinks the largest gap");
    check(fine.samples.front() == coarse.samples.front() &&
              fine.samples.back() == coarse.samples.back(),
          "densify keeps the endpoints");
  }

  // Cover construction: bands are exactly the level ranges, the canonical
  // families cover the space, and out-of-range bands are refused.
  {
    const Cover b1 = band_cover(f, 1);
    bool range_ok = !b1.vertices.empty();
    for (int v : b1.vertices) {
      range_ok = range_ok && f.verts[v].level >= 1 && f.verts[v].level <= 2;
    }
    check(range_ok, "band 1 holds levels 1 through 2 only");
    check(static_cast<int>(b1.vertices.size()) == f.level_begin[3] - f.level_begin[1],
          "band 1 holds every vertex of those levels");
    for (const Cover& c : canonical_level_family(f)) {
      check(cover_covers_space(f, c), "canonical level cover spans the space");
    }
    for (const Cover& c : canonical_band_family(f)) {
      check(cover_covers_space(f, c), "canonical band cover spans the space");
    }
    bool threw = false;
    try {
      band_cover(f, 2);
    } catch (const depth_error&) {
      threw = true;
    }
    check(threw, "band beyond half depth is refused");
  }

  // Projection onto the root alone costs exactly the root weight.
  {
    Cover root;
    root.vertices = {0};
    root.label = "level";
    root.param = 0;
    std::vector<double> tau(f.vertex_count(), 0.0);
    tau[0] = 0.625;
    const auto [val, proj] = min_projection_length(f, row, root, tau);
    check(std::abs(val - 0.625) < 1e-15, "root projection costs the root weight");
    check(proj.balls.size() == 1 && proj.balls[0] == 0, "root projection uses one block");
  }

  // The farthest-reach dynamic program agrees with brute-force enumeration
  // on short curves across several covers and random weights.
  {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<Cover> covers = canonical_level_family(f);
    const std::vector<Cover> bands = canonical_band_family(f);
    covers.insert(covers.end(), bands.begin(), bands.end());
    for (int rep = 0; rep < 25; ++rep) {
      // Random monotone staircase; short enough for the enumeration oracle.
      std::vector<int> ids;
      int c = static_cast<int>(rng() % 3), r = static_cast<int>(rng() % 3);
      ids.push_back(gid(n, c, r));
      while (static_cast<int>(ids.size()) < 6 && (c < n - 1 || r < n - 1)) {
        if (c < n - 1 && (r == n - 1 || rng() % 2 == 0)) {
          ++c;
        } else {
          ++r;
        }
        ids.push_back(gid(n, c, r));
      }
      const SampledCurve cu = make_curve(sq, ids);
      std::vector<double> tau(f.vertex_count());
      for (double& t : tau) t = unif(rng);
      for (const Cover& cv : covers) {
        const double dp = min_projection_length(f, cu, cv, tau).first;
        const double ex = min_projection_exhaustive(f, cu, cv, tau);
        check(std::abs(dp - ex) < 1e-12, "dynamic program matches enumeration");
      }
    }
  }

  // The minimum projection cost is reversal invariant.
  {
    std::vector<int> rev = row_ids;
    std::reverse(rev.begin(), rev.end());
    const SampledCurve back = make_curve(sq, rev);
    std::mt19937_64 rng(37);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<double> tau(f.vertex_count());
    for (double& t : tau) t = unif(rng);
    for (const Cover& cv : canonical_level_family(f)) {
      const double a = min_projection_length(f, row, cv, tau).first;
      const double b = min_projection_length(f, back, cv, tau).first;
      check(std::abs(a - b) < 1e-12, "projection cost ignores orientation");
    }
  }

  // Zero weights project for free; the radius-proportional profile is exact
  // and scales linearly with eps.
  {
    const std::vector<double> zero(f.vertex_count(), 0.0);
    const Cover lv2 = canonical_level_family(f)[1];
    check(min_projection_length(f, row, lv2, zero).first == 0.0,
          "zero weights give zero projection cost");
    const double eps = 0.05;
    const std::vector<double> te = tau_epsilon(f, eps);
    bool exact = true;
    for (int v = 0; v < f.vertex_count(); ++v) {
      exact = exact && std::abs(te[v] - f.verts[v].radius * eps) < 1e-18;
    }
    check(exact, "radius profile is radius times eps");
    const std::vector<double> te10 = tau_epsilon(f, eps / 10.0);
    bool tenth = true;
    for (int v = 0; v < f.vertex_count(); ++v) {
      tenth = tenth && std::abs(te10[v] * 10.0 - te[v]) < 1e-18;
    }
    check(tenth, "radius profile scales linearly in eps");
    bool threw = false;
    try {
      tau_epsilon(f, 0.0);
    } catch (const precondition_error&) {
      threw = true;
    }
    check(threw, "zero eps is refused");
  }

  // Tail admissibility: uniformly heavy weights pass, zero weights fail.
  {
    std::vector<Cover> covers = canonical_level_family(f);
    const std::vector<double> heavy(f.vertex_count(), 10.0);
    const std::vector<double> zero(f.vertex_count(), 0.0);
    check(is_admissible_covering(f, heavy, row, covers, 1e-9),
          "heavy uniform weights are admissible");
    check(!is_admissible_covering(f, zero, row, covers, 1e-9),
          "zero weights are not admissible");
  }

  // A two-sample jump across the square escapes every deep shrunk ball.
  {
    const SampledCurve jump = make_curve(sq, {gid(n, 0, 0), gid(n, n - 1, n - 1)});
    const Cover lv3 = canonical_level_family(f)[2];
    std::vector<double> tau(f.vertex_count(), 1.0);
    bool threw = false;
    try {
      min_projection_length(f, jump, lv3, tau);
    } catch (const margin_error&) {
      threw = true;
    }
    check(threw, "coarse sampling against small balls is refused");
  }

  // Constraint-generated covering bound: admissible for both canonical
  // families, nonnegative certificate, weak below strong energy.
  {
    const std::vector<SampledCurve> curves = {row, make_curve(sq, col_ids)};
    SolveConfig cfg;
    const double p = 2.0;
    CapacityReport rep = wccap_upper(f, curves, p, cfg);
    check(rep.status == "ok", "covering solve reports ok status");
    check(static_cast<int>(rep.tau.size()) == f.vertex_count(),
          "certificate covers every vertex");
    bool nonneg = true;
    for (double t : rep.tau) nonneg = nonneg && t >= 0.0;
    check(nonneg, "certificate weights are nonnegative");
    const std::vector<Cover> levels = canonical_level_family(f);
    const std::vector<Cover> bands = canonical_band_family(f);
    const double tol = cfg.outer_tol + 1e-9;
    for (const SampledCurve& cu : curves) {
      check(is_admissible_covering(f, rep.tau, cu, levels, tol),
            "certificate admits every curve against level covers");
      check(is_admissible_covering(f, rep.tau, cu, bands, tol),
            "certificate admits every curve against band covers");
    }
    check(rep.weak_value <= rep.lp_value + 1e-12, "weak energy never exceeds strong energy");
    bool threw = false;
    try {
      wccap_upper(f, {}, p, cfg);
    } catch (const precondition_error&) {
      threw = true;
    }
    check(threw, "empty curve family is refused");
  }

  // Vertex lift of a constant density is the radius profile scaled by it.
  {
    const double c = 0.375;
    const std::vector<double> rho(sq.size(), c);
    const std::vector<double> tau = lift_density_to_vertices(rho, f, 2.0, 2.0);
    bool exact = true;
    for (int v = 0; v < f.vertex_count(); ++v) {
      exact = exact && std::abs(tau[v] - f.verts[v].radius * c) <
                           1e-12 * std::max(1.0, f.verts[v].radius * c);
    }
    check(exact, "constant density lifts to radius times the constant");
    bool threw = false;
    try {
      lift_density_to_vertices(rho, f, 1.0, 2.0);
    } catch (const precondition_error&) {
      threw = true;
    }
    check(threw, "vertex lift refuses p = 1");
  }

  // Boundary projection density: matches the doubled-ball sum directly.
  {
    const double eps = 0.05;
    const std::vector<double> te = tau_epsilon(f, eps);
    const int level = 2;
    const std::vector<double> sigma = sigma_n_projection(te, f, level);
    bool match = true;
    for (int x = 0; x < static_cast<int>(sq.size()); x += 17) {
      double want = 0.0;
      for (int v = f.level_begin[level]; v < f.level_begin[level + 1]; ++v) {
        if (sq.dist(x, f.verts[v].center) <= 2.0 * f.verts[v].radius + kBallSlack) {
          want += 2.0 * te[v] / f.verts[v].radius;
        }
      }
      match = match && std::abs(sigma[x] - want) < 1e-12 * std::max(1.0, want);
    }
    check(match, "projection density matches the doubled-ball sum");
  }

  if (failures == 0) std::printf("PASS test_covering\n");
  return failures == 0 ? 0 : 1;
}
