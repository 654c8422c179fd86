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

#include "hypcap/weak_norm.hpp"

#include <algorithm>
#include <cmath>

namespace hypcap {

namespace {

void check_p(double p) {
  if (!(p >= 1.0) || p > 16.0) throw precondition_error("p must lie in [1, 16]");
}

std::vector<double> sorted_abs_desc(const std::vector<double>& f) {
  std::vector<double> a(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!std::isfinite(f[i])) throw precondition_error("entries must be finite");
    a[i] = std::abs(f[i]);
  }
  std::sort(a.begin(), a.end(), std::greater<double>());
  return a;
}

}  // namespace

double lp_norm(const std::vector<double>& f, double p) {
  check_p(p);
  double acc = 0.0;
  for (double v : f) {
    if (!std::isfinite(v)) throw precondition_error("entries must be finite");
    acc += std::pow(std::abs(v), p);
  }
  return std::pow(acc, 1.0 / p);
}

double weak_lp_norm(const std::vector<double>& f, double p) {
  check_p(p);
  const auto a = sorted_abs_desc(f);
  double best = 0.0;
  for (std::size_t k = 1; k <= a.size(); ++k) {
    best = std::max(best, std::pow(static_cast<double>(k), 1.0 / p) * a[k - 1]);
  }
  return best;
}

double weak_lp_norm_by_levels(const std::vector<double>& f, double p) {
  check_p(p);
  const auto a = sorted_abs_desc(f);
  double best = 0.0;
  for (double level : a) {
    if (level <= 0.0) continue;
    for (double lambda : {level * (1.0 - 1e-13), level}) {
      std::size_t count = 0;
      for (double v : a) {
        if (v > lambda) ++count;
      }
      if (count > 0) {
        best = std::max(best, lambda * std::pow(static_cast<double>(count), 1.0 / p));
      }
    }
  }
  return best;
}

MultiplicityTransferReport check_bounded_multiplicity_transfer(
    const std::vector<double>& s_vals, const std::vector<double>& t_vals,
    const std::vector<std::vector<int>>& relation, double p, double ceiling) {
  check_p(p);
  if (relation.size() != s_vals.size()) {
    throw precondition_error("multiplicity transfer: relation must index every s entry");
  }
  MultiplicityTransferReport rep;
  std::vector<int> col_mult(t_vals.size(), 0);
  for (std::size_t h = 0; h < relation.size(); ++h) {
    double bound = 0.0;
    for (int k : relation[h]) {
      if (k < 0 || static_cast<std::size_t>(k) >= t_vals.size()) {
        throw precondition_error("multiplicity transfer: relation index out of range");
      }
      bound += std::abs(t_vals[k]);
      ++col_mult[k];
    }
    rep.max_row_multiplicity =
        std::max(rep.max_row_multiplicity, static_cast<int>(relation[h].size()));
    if (std::abs(s_vals[h]) > bound + 1e-12) {
      throw precondition_error("multiplicity transfer: domination fails");
    }
  }
  for (int m : col_mult) rep.max_col_multiplicity = std::max(rep.max_col_multiplicity, m);
  const int big_n = std::max(1, std::max(rep.max_row_multiplicity, rep.max_col_multiplicity));
  rep.ceiling = ceiling > 0.0 ? ceiling : std::pow(static_cast<double>(big_n), 1.0 + 1.0 / p);
  rep.s_norm = weak_lp_norm(s_vals, p);
  rep.t_norm = weak_lp_norm(t_vals, p);
  rep.ratio = (rep.s_norm == 0.0 && rep.t_norm == 0.0) ? 0.0 : rep.s_norm / rep.t_norm;
  rep.pass = rep.ratio <= rep.ceiling + 1e-12;
  return rep;
}

}  // namespace hypcap
