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

#include <cstddef>
#include <functional>
#include <vector>

namespace hypcap::par {

// All parallel kernels must produce bit-identical results for any thread
// count: either each index writes its own output slot, or reductions are
// accumulated per fixed-size chunk and the chunk partials are combined in
// index order on one thread.

inline constexpr std::size_t kChunk = 4096;

bool openmp_enabled();
int max_threads();

// body(i) for i in [0, n); each iteration owns its writes.
void for_each_index(std::size_t n, const std::function<void(std::size_t)>& body);
void for_each_index_serial(std::size_t n, const std::function<void(std::size_t)>& body);

// Chunked sum of term(i) over [0, n). Chunk partials are added in chunk
// order, so the result does not depend on the thread count.
double sum_terms(std::size_t n, const std::function<double(std::size_t)>& term);
double sum_terms_serial(std::size_t n, const std::function<double(std::size_t)>& term);

// Chunked max, same determinism contract. Returns init for n == 0.
double max_terms(std::size_t n, double init, const std::function<double(std::size_t)>& term);
double max_terms_serial(std::size_t n, double init, const std::function<double(std::size_t)>& term);

}  // namespace hypcap::par
