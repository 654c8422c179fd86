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

#include <vector>

#include "hypcap/filling.hpp"
#include "hypcap/metric_space.hpp"

namespace hypcap {

// Point bijection between two spaces with a power-law distortion control
// eta(t) = t^eta_alpha.
struct QuasiSymmetry {
  const MetricSpace* from = nullptr;
  const MetricSpace* to = nullptr;
  std::vector<int> forward;
  std::vector<int> backward;
  double eta_alpha = 1.0;
};

// Same points, metric d^alpha, rescaled back to diameter 1/2; the regularity
// exponent becomes Q / alpha. Requires alpha in (0, 1).
MetricSpace snowflake_space(const MetricSpace& sp, double alpha);

// Identity point map viewed as a quasisymmetry between a space and its
// snowflake (or any same-point-set companion).
QuasiSymmetry identity_snowflake(const MetricSpace& from, const MetricSpace& to, double alpha);

// General point-pair table; verifies the bijection.
QuasiSymmetry make_point_map(const MetricSpace& from, const MetricSpace& to,
                             std::vector<int> forward, double eta_alpha);

QuasiSymmetry inverse_map(const QuasiSymmetry& qs);

struct EtaReport {
  long long triples = 0;
  long long violations = 0;
  double worst_excess = 0.0;  // max ratio / eta(t) - 1 over tested triples
};

// Three-point distortion test on random triples.
EtaReport eta_test(const QuasiSymmetry& qs, int triples, Rng& rng);

// Vertex map between fillings induced by a point map: each vertex goes to the
// deepest target vertex whose ball contains the image of its ball.
struct QiMap {
  const Filling* from = nullptr;
  const Filling* to = nullptr;
  std::vector<int> map;
  int adjacency_bound = 0;  // max image graph distance over adjacent pairs
  double mult_c = 0.0;      // additive slack of the fitted envelope
  double mult_C = 1.0;      // multiplicative envelope over sampled pairs
  int root_fallbacks = 0;   // images that only the root ball contained
};

QiMap qi_extension(const QuasiSymmetry& phi, const Filling& X, const Filling& Y);

// max graph distance |G(F(x)) - x| over all vertices of F.from.
int roundtrip_bound(const QiMap& F, const QiMap& G);

// sigma(e') = sum over X-vertices within graph distance D of G(e'+) of the
// incident tau sums, plus the same around G(e'-). G maps Y to X.
std::vector<double> transport_edge_function(const std::vector<double>& tau_edge,
                                            const QiMap& G, int D);

// sigma(y) = tau(G(y)). G maps Y to X.
std::vector<double> transport_vertex_function(const std::vector<double>& tau_vertex,
                                              const QiMap& G);

}  // namespace hypcap
