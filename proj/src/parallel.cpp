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

#include "hypcap/parallel.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hypcap::par {

bool openmp_enabled() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void for_each_index(std::size_t n, const std::function<void(std::size_t)>& body) {
#ifdef _OPENMP
  const long long nn = static_cast<long long>(n);
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < nn; ++i) {
    body(static_cast<std::size_t>(i));
  }
#else
  for_each_index_serial(n, body);
#endif
}

void for_each_index_serial(std::size_t n, const std::function<void(std::size_t)>& body) {
  for (std::size_t i = 0; i < n; ++i) {
    body(i);
  }
}

namespace {

std::size_t chunk_count(std::size_t n) { return (n + kChunk - 1) / kChunk; }

}  // namespace

double sum_terms(std::size_t n, const std::function<double(std::size_t)>& term) {
  if (n == 0) return 0.0;
  const std::size_t nc = chunk_count(n);
  std::vector<double> partial(nc, 0.0);
#ifdef _OPENMP
  const long long ncc = static_cast<long long>(nc);
#pragma omp parallel for schedule(static)
  for (long long c = 0; c < ncc; ++c) {
    const std::size_t lo = static_cast<std::size_t>(c) * kChunk;
    const std::size_t hi = std::min(n, lo + kChunk);
    double acc = 0.0;
    for (std::size_t i = lo; i < hi; ++i) acc += term(i);
    partial[static_cast<std::size_t>(c)] = acc;
  }
#else
  for (std::size_t c = 0; c < nc; ++c) {
    const std::size_t lo = c * kChunk;
    const std::size_t hi = std::min(n, lo + kChunk);
    double acc = 0.0;
    for (std::size_t i = lo; i < hi; ++i) acc += term(i);
    partial[c] = acc;
  }
#endif
  double total = 0.0;
  for (double v : partial) total += v;
  return total;
}

double sum_terms_serial(std::size_t n, const std::function<double(std::size_t)>& term) {
  // Same chunked accumulation order as the parallel kernel.
  if (n == 0) return 0.0;
  const std::size_t nc = chunk_count(n);
  double total = 0.0;
  for (std::size_t c = 0; c < nc; ++c) {
    const std::size_t lo = c * kChunk;
    const std::size_t hi = std::min(n, lo + kChunk);
    double acc = 0.0;
    for (std::size_t i = lo; i < hi; ++i) acc += term(i);
    total += acc;
  }
  return total;
}

double max_terms(std::size_t n, double init, const std::function<double(std::size_t)>& term) {
  if (n == 0) return init;
  const std::size_t nc = chunk_count(n);
  std::vector<double> partial(nc, init);
#ifdef _OPENMP
  const long long ncc = static_cast<long long>(nc);
#pragma omp parallel for schedule(static)
  for (long long c = 0; c < ncc; ++c) {
    const std::size_t lo = static_cast<std::size_t>(c) * kChunk;
    const std::size_t hi = std::min(n, lo + kChunk);
    double acc = init;
    for (std::size_t i = lo; i < hi; ++i) acc = std::max(acc, term(i));
    partial[static_cast<std::size_t>(c)] = acc;
  }
#else
  for (std::size_t c = 0; c < nc; ++c) {
    const std::size_t lo = c * kChunk;
    const std::size_t hi = std::min(n, lo + kChunk);
    double acc = init;
    for (std::size_t i = lo; i < hi; ++i) acc = std::max(acc, term(i));
    partial[c] = acc;
  }
#endif
  double total = init;
  for (double v : partial) total = std::max(total, v);
  return total;
}

double max_terms_serial(std::size_t n, double init, const std::function<double(std::size_t)>& term) {
  if (n == 0) return init;
  double total = init;
  for (std::size_t i = 0; i < n; ++i) total = std::max(total, term(i));
  return total;
}

}  // namespace hypcap::par
