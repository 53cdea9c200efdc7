// Copyright 2026 The Authors.
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

#ifndef EXCLUST_PARALLEL_HPP_
#define EXCLUST_PARALLEL_HPP_

#include <cstddef>
#include <thread>
#include <vector>

namespace exclust {

// Runs fn(i) for i in [0, n). Rows are dealt round-robin to `threads`
// workers; fn must only write state owned by index i.
template <typename IndexT, typename Fn>
void parallel_for(IndexT n, int threads, Fn&& fn) {
  if (threads <= 1 || n < 2) {
    for (IndexT i = 0; i < n; ++i) fn(i);
    return;
  }
  const IndexT stride = static_cast<IndexT>(threads);
  std::vector<std::jthread> workers;
  workers.reserve(static_cast<std::size_t>(threads));
  for (IndexT t = 0; t < stride; ++t) {
    workers.emplace_back([&fn, t, n, stride] {
      for (IndexT i = t; i < n; i += stride) fn(i);
    });
  }
}

}  // namespace exclust

#endif  // EXCLUST_PARALLEL_HPP_
