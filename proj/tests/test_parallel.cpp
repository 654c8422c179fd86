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

#include <cassert>
#include <cmath>
#include <cstdio>
#include <vector>

#include "hypcap/parallel.hpp"

using namespace hypcap;

static int failures = 0;

static void check(bool ok, const char* what) {
  std::printf("%s %s\n", ok ? "ok  " : "FAIL", what);
  if (!ok) ++failures;
}

int main() {
  std::printf("openmp=%d threads=%d\n", par::openmp_enabled() ? 1 : 0, par::max_threads());

  // Sizes straddle the chunk boundary so partial chunks are exercised.
  const std::vector<std::size_t> sizes = {0, 1, 7, par::kChunk - 1, par::kChunk,
                                          par::kChunk + 1, 3 * par::kChunk + 17};
  const auto term = [](std::size_t i) {
    return std::sin(0.7 * static_cast<double>(i)) + 1e-3 * static_cast<double>(i % 97);
  };

  for (std::size_t n : sizes) {
    std::vector<double> a(n, 0.0), b(n, 1.0);
    par::for_each_index(n, [&](std::size_t i) { a[i] = term(i); });
    par::for_each_index_serial(n, [&](std::size_t i) { b[i] = term(i); });
    check(a == b, "for_each_index writes match the serial pass bitwise");

    const double sp = par::sum_terms(n, term);
    const double ss = par::sum_terms_serial(n, term);
    check(sp == ss, "sum_terms matches the serial chunk order bitwise");

    const double mp = par::max_terms(n, -1e300, term);
    const double ms = par::max_terms_serial(n, -1e300, term);
    check(mp == ms, "max_terms matches the serial pass bitwise");
  }

  check(par::sum_terms(0, term) == 0.0, "empty sum is zero");
  check(par::max_terms(0, -3.5, term) == -3.5, "empty max returns init");

  // A second run must reproduce the first exactly.
  const std::size_t n = 2 * par::kChunk + 5;
  assert(par::sum_terms(n, term) == par::sum_terms(n, term));

  std::printf(failures == 0 ? "PASS test_parallel\n" : "FAIL test_parallel (%d)\n", failures);
  return failures == 0 ? 0 : 1;
}
