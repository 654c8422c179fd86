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

#include "hypcap/metric_space.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "hypcap/parallel.hpp"

namespace hypcap {

double MetricSpace::total_mass() const {
  return par::sum_terms_serial(weight.size(), [&](std::size_t i) { return weight[i]; });
}

namespace {

// Raw Euclidean diameter of the subset, exact. Brute force for small sets,
// convex hull + rotating calipers otherwise (dim 2 only).
double raw_subset_diameter(const MetricSpace& sp, const std::vector<int>& ids) {
  const std::size_t n = ids.size();
  if (n < 2) return 0.0;
  if (sp.dim == 1) {
    double lo = sp.x[ids[0]], hi = sp.x[ids[0]];
    for (int id : ids) {
      lo = std::min(lo, sp.x[id]);
      hi = std::max(hi, sp.x[id]);
    }
    return hi - lo;
  }
  if (n <= 2048) {
    double best = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const double dx = sp.x[ids[i]] - sp.x[ids[j]];
        const double dy = sp.y[ids[i]] - sp.y[ids[j]];
        best = std::max(best, dx * dx + dy * dy);
      }
    }
    return std::sqrt(best);
  }
  // Monotone-chain hull on the subset, then all hull pairs (hulls stay small
  // for grid-like data).
  std::vector<std::pair<double, double>> pts;
  pts.reserve(n);
  for (int id : ids) pts.emplace_back(sp.x[id], sp.y[id]);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const auto cross = [](const std::pair<double, double>& o, const std::pair<double, double>& a,
                        const std::pair<double, double>& b) {
    return (a.first - o.first) * (b.second - o.second) -
           (a.second - o.second) * (b.first - o.first);
  };
  std::vector<std::pair<double, double>> hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = pts.size(); i-- > 1;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i - 1]) <= 0) --k;
    hull[k++] = pts[i - 1];
  }
  hull.resize(k > 1 ? k - 1 : k);
  double best = 0.0;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    for (std::size_t j = i + 1; j < hull.size(); ++j) {
      const double dx = hull[i].first - hull[j].first;
      const double dy = hull[i].second - hull[j].second;
      best = std::max(best, dx * dx + dy * dy);
    }
  }
  return std::sqrt(best);
}

void set_counting_measure(MetricSpace& sp) {
  sp.weight.assign(sp.size(), 1.0 / static_cast<double>(sp.size()));
}

// Rescale so that metric diameter is exactly 1/2, given the raw Euclidean
// diameter.
void rescale_from_raw(MetricSpace& sp, double raw_diam, double raw_mesh) {
  sp.scale = 0.5 / std::pow(raw_diam, sp.alpha);
  sp.diameter = sp.metric_of(raw_diam);
  sp.mesh = sp.metric_of(raw_mesh);
}

}  // namespace

double subset_diameter(const MetricSpace& sp, const std::vector<int>& ids) {
  return sp.metric_of(raw_subset_diameter(sp, ids));
}

MetricSpace build_square(int grid_n) {
  if (grid_n < 2 || grid_n > 512) throw precondition_error("build_square: grid_n out of range");
  MetricSpace sp;
  sp.name = "square";
  sp.dim = 2;
  sp.Q = 2.0;
  const double h = 1.0 / static_cast<double>(grid_n - 1);
  sp.x.reserve(static_cast<std::size_t>(grid_n) * grid_n);
  sp.y.reserve(sp.x.capacity());
  for (int j = 0; j < grid_n; ++j) {
    for (int i = 0; i < grid_n; ++i) {
      sp.x.push_back(i * h);
      sp.y.push_back(j * h);
    }
  }
  set_counting_measure(sp);
  rescale_from_raw(sp, std::sqrt(2.0), h);
  return sp;
}

MetricSpace build_carpet(int depth) {
  if (depth < 1 || depth > 6) throw precondition_error("build_carpet: depth out of range");
  MetricSpace sp;
  sp.name = "carpet";
  sp.dim = 2;
  sp.Q = std::log(8.0) / std::log(3.0);
  struct Cell {
    double ox, oy;
  };
  std::vector<Cell> cells{{0.0, 0.0}};
  double size = 1.0;
  static constexpr int kKeep[8][2] = {{0, 0}, {1, 0}, {2, 0}, {0, 1},
                                      {2, 1}, {0, 2}, {1, 2}, {2, 2}};
  for (int d = 0; d < depth; ++d) {
    std::vector<Cell> next;
    next.reserve(cells.size() * 8);
    const double child = size / 3.0;
    for (const Cell& c : cells) {
      for (const auto& k : kKeep) {
        next.push_back({c.ox + k[0] * child, c.oy + k[1] * child});
      }
    }
    cells.swap(next);
    size = child;
  }
  sp.x.reserve(cells.size());
  sp.y.reserve(cells.size());
  for (const Cell& c : cells) {
    sp.x.push_back(c.ox + size / 2.0);
    sp.y.push_back(c.oy + size / 2.0);
  }
  set_counting_measure(sp);
  const double raw_diam = std::sqrt(2.0) * (1.0 - size);  // opposite corner centers
  rescale_from_raw(sp, raw_diam, size);
  return sp;
}

MetricSpace build_rectangle(int nx, int ny, double width, double height) {
  if (nx < 2 || ny < 2 || nx * ny > 300000) {
    throw precondition_error("build_rectangle: grid out of range");
  }
  if (!(width > 0.0) || !(height > 0.0)) {
    throw precondition_error("build_rectangle: degenerate extent");
  }
  MetricSpace sp;
  sp.name = "rectangle";
  sp.dim = 2;
  sp.Q = 2.0;
  const double hx = width / static_cast<double>(nx - 1);
  const double hy = height / static_cast<double>(ny - 1);
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      sp.x.push_back(i * hx);
      sp.y.push_back(j * hy);
    }
  }
  const double raw_diam = std::sqrt(width * width + height * height);
  rescale_from_raw(sp, raw_diam, std::min(hx, hy));
  // Cell area in rescaled-metric units; total mass = rescaled area.
  const double cell = hx * hy * sp.scale * sp.scale;
  sp.weight.assign(sp.size(), cell);
  return sp;
}

MetricSpace build_line(const std::vector<double>& xs) {
  if (xs.size() < 2) throw precondition_error("build_line: need at least two points");
  MetricSpace sp;
  sp.name = "line";
  sp.dim = 1;
  sp.Q = 1.0;
  sp.x = xs;
  set_counting_measure(sp);
  finalize_space(sp, /*rescale_to_half=*/false);
  return sp;
}

void finalize_space(MetricSpace& sp, bool rescale_to_half) {
  const std::size_t n = sp.size();
  if (n < 2) throw precondition_error("finalize_space: need at least two points");
  if (sp.weight.size() != n) set_counting_measure(sp);
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  const double raw_diam = raw_subset_diameter(sp, all);
  if (!(raw_diam > 0.0)) throw precondition_error("finalize_space: all points coincide");
  // Min positive pairwise raw distance; O(n^2) scan, chunk-parallel.
  std::vector<double> per_point(n, std::numeric_limits<double>::infinity());
  par::for_each_index(n, [&](std::size_t i) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const double d = sp.euclid(static_cast<int>(i), static_cast<int>(j));
      if (d > 0.0) best = std::min(best, d);
    }
    per_point[i] = best;
  });
  double raw_mesh = std::numeric_limits<double>::infinity();
  for (double v : per_point) raw_mesh = std::min(raw_mesh, v);
  if (rescale_to_half) {
    rescale_from_raw(sp, raw_diam, raw_mesh);
  } else {
    sp.diameter = sp.metric_of(raw_diam);
    sp.mesh = sp.metric_of(raw_mesh);
  }
}

SeparatedNet maximal_separated_net(const MetricSpace& sp, double delta,
                                   const std::vector<int>& order) {
  if (!(delta > 0.0)) throw precondition_error("maximal_separated_net: delta must be positive");
  if (order.size() != sp.size()) {
    throw precondition_error("maximal_separated_net: order must be a permutation of all points");
  }
  SeparatedNet net;
  net.delta = delta;
  for (int cand : order) {
    bool ok = true;
    for (int m : net.members) {
      if (sp.dist(cand, m) < delta) {
        ok = false;
        break;
      }
    }
    if (ok) net.members.push_back(cand);
  }
  return net;
}

bool is_separated(const MetricSpace& sp, const std::vector<int>& members, double delta) {
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (sp.dist(members[i], members[j]) < delta) return false;
    }
  }
  return true;
}

bool covers_all(const MetricSpace& sp, const std::vector<int>& members, double delta) {
  const std::size_t n = sp.size();
  std::vector<char> ok(n, 0);
  par::for_each_index(n, [&](std::size_t z) {
    for (int m : members) {
      if (sp.dist(static_cast<int>(z), m) <= delta) {
        ok[z] = 1;
        return;
      }
    }
  });
  return std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });
}

RegularityEstimate regularity_constants(const MetricSpace& sp, int center_stride,
                                        int radius_steps) {
  if (center_stride < 1 || radius_steps < 2) {
    throw precondition_error("regularity_constants: bad sampling parameters");
  }
  RegularityEstimate est;
  est.r_min = 3.0 * sp.mesh;
  est.r_max = sp.diameter;
  if (!(est.r_min > 0.0) || est.r_min >= est.r_max) {
    throw resolution_error("regularity_constants: no radii above the mesh floor");
  }
  const double ratio_step =
      std::pow(est.r_max / est.r_min, 1.0 / static_cast<double>(radius_steps - 1));
  std::vector<double> radii(radius_steps);
  for (int k = 0; k < radius_steps; ++k) radii[k] = est.r_min * std::pow(ratio_step, k);
  const std::size_t n = sp.size();
  std::vector<int> centers;
  for (std::size_t i = 0; i < n; i += static_cast<std::size_t>(center_stride)) {
    centers.push_back(static_cast<int>(i));
  }
  std::vector<double> lo(centers.size(), std::numeric_limits<double>::infinity());
  std::vector<double> hi(centers.size(), 0.0);
  par::for_each_index(centers.size(), [&](std::size_t ci) {
    const int c = centers[ci];
    // One distance pass per center; accumulate per-radius mass.
    std::vector<double> mass(radii.size(), 0.0);
    for (std::size_t z = 0; z < n; ++z) {
      const double d = sp.dist(c, static_cast<int>(z));
      for (std::size_t k = 0; k < radii.size(); ++k) {
        if (d <= radii[k] + kBallSlack) mass[k] += sp.weight[z];
      }
    }
    for (std::size_t k = 0; k < radii.size(); ++k) {
      const double ratio = mass[k] / std::pow(radii[k], sp.Q);
      lo[ci] = std::min(lo[ci], ratio);
      hi[ci] = std::max(hi[ci], ratio);
    }
  });
  est.c_Q = std::numeric_limits<double>::infinity();
  est.C_Q = 0.0;
  for (std::size_t ci = 0; ci < centers.size(); ++ci) {
    est.c_Q = std::min(est.c_Q, lo[ci]);
    est.C_Q = std::max(est.C_Q, hi[ci]);
  }
  est.samples = static_cast<long long>(centers.size()) * radius_steps;
  return est;
}

std::vector<int> ball_points(const MetricSpace& sp, int c, double r) {
  std::vector<int> out;
  const std::size_t n = sp.size();
  for (std::size_t z = 0; z < n; ++z) {
    if (sp.dist(c, static_cast<int>(z)) <= r + kBallSlack) out.push_back(static_cast<int>(z));
  }
  return out;
}

double ball_mass(const MetricSpace& sp, int c, double r) {
  return par::sum_terms_serial(sp.size(), [&](std::size_t z) {
    return sp.dist(c, static_cast<int>(z)) <= r + kBallSlack ? sp.weight[z] : 0.0;
  });
}

}  // namespace hypcap
