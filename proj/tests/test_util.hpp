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

// Shared generators and naive reference solvers for the test suites. The
// naive solvers enumerate without pruning or clever ordering so they stay
// independent of the library's search code.

#ifndef EXCLUST_TESTS_TEST_UTIL_HPP_
#define EXCLUST_TESTS_TEST_UTIL_HPP_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include <Eigen/Core>

#include "exclust/core.hpp"
#include "exclust/coverage.hpp"

namespace exclust::testing {

inline Eigen::MatrixXd line_points(std::initializer_list<double> xs) {
  Eigen::MatrixXd p(static_cast<Index>(xs.size()), 1);
  Index i = 0;
  for (double x : xs) p(i++, 0) = x;
  return p;
}

inline DistanceMatrix line_distances(std::initializer_list<double> xs) {
  return compute_distances(line_points(xs), MetricKind::kEuclidean);
}

inline Eigen::MatrixXd uniform_points(std::mt19937_64& rng, Index n,
                                      Index dims = 2) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Eigen::MatrixXd p(n, dims);
  for (Index i = 0; i < n; ++i)
    for (Index d = 0; d < dims; ++d) p(i, d) = u(rng);
  return p;
}

inline Index uniform_int(std::mt19937_64& rng, Index lo, Index hi) {
  return std::uniform_int_distribution<Index>(lo, hi)(rng);
}

// Random set system over {0..n-1} with m sets; each element lands in each
// set with probability `density`. When `coverable`, element e is also put in
// set e % m.
inline SetSystem random_system(std::mt19937_64& rng, Index n, Index m,
                               double density, bool coverable) {
  std::bernoulli_distribution in(density);
  std::vector<IndexList> sets(static_cast<std::size_t>(m));
  for (Index e = 0; e < n; ++e) {
    for (Index s = 0; s < m; ++s) {
      if (in(rng)) sets[static_cast<std::size_t>(s)].push_back(e);
    }
    if (coverable) sets[static_cast<std::size_t>(e % m)].push_back(e);
  }
  return SetSystem(n, std::move(sets));
}

// Minimum max-diameter over all k^n labelings with every label used.
inline double naive_min_diameter(const DistanceMatrix& dm, Index k) {
  const Index n = dm.size();
  Index total = 1;
  for (Index i = 0; i < n; ++i) total *= k;
  double best = std::numeric_limits<double>::infinity();
  IndexList label(static_cast<std::size_t>(n));
  for (Index code = 0; code < total; ++code) {
    Index c = code;
    std::vector<bool> used(static_cast<std::size_t>(k), false);
    for (Index i = 0; i < n; ++i) {
      label[static_cast<std::size_t>(i)] = c % k;
      used[static_cast<std::size_t>(c % k)] = true;
      c /= k;
    }
    if (std::count(used.begin(), used.end(), true) != k) continue;
    double diam = 0.0;
    for (Index i = 0; i < n; ++i)
      for (Index j = i + 1; j < n; ++j)
        if (label[static_cast<std::size_t>(i)] ==
            label[static_cast<std::size_t>(j)])
          diam = std::max(diam, dm(i, j));
    best = std::min(best, diam);
  }
  return best;
}

inline std::uint64_t union_mask(const SetSystem& sys, std::uint64_t chosen) {
  std::uint64_t u = 0;
  for (Index s = 0; s < sys.num_sets(); ++s) {
    if (chosen >> s & 1U) {
      for (Index e : sys.set(s)) u |= std::uint64_t{1} << e;
    }
  }
  return u;
}

// Scans all 2^m subcollections.
inline Index naive_min_cover(const SetSystem& sys) {
  const Index m = sys.num_sets();
  const std::uint64_t full = (std::uint64_t{1} << sys.universe_size()) - 1;
  Index best = std::numeric_limits<Index>::max();
  for (std::uint64_t c = 0; c < (std::uint64_t{1} << m); ++c) {
    if (union_mask(sys, c) == full) {
      best = std::min<Index>(best, std::popcount(c));
    }
  }
  return best;
}

inline Index naive_max_coverage(const SetSystem& sys, Index beta) {
  const Index m = sys.num_sets();
  Index best = 0;
  for (std::uint64_t c = 0; c < (std::uint64_t{1} << m); ++c) {
    if (std::popcount(c) > beta) continue;
    best = std::max<Index>(best, std::popcount(union_mask(sys, c)));
  }
  return best;
}

}  // namespace exclust::testing

#endif  // EXCLUST_TESTS_TEST_UTIL_HPP_
