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

// Greedy engines for minimum set cover and budgeted maximum coverage.

#ifndef EXCLUST_COVERAGE_HPP_
#define EXCLUST_COVERAGE_HPP_

#include <vector>

#include "exclust/core.hpp"

namespace exclust {

// A collection of m subsets of the universe {0, ..., universe_size - 1}.
// Members are stored sorted and deduplicated.
class SetSystem {
 public:
  SetSystem(Index universe_size, std::vector<IndexList> sets);

  // Set i is the neighborhood S_i, so set index == instance index.
  static SetSystem from_neighborhoods(const NeighborhoodSets& neigh);

  Index universe_size() const { return universe_size_; }
  Index num_sets() const { return static_cast<Index>(sets_.size()); }
  const IndexList& set(Index i) const {
    return sets_[static_cast<std::size_t>(i)];
  }
  const std::vector<IndexList>& sets() const { return sets_; }

 private:
  SetSystem() = default;

  Index universe_size_ = 0;
  std::vector<IndexList> sets_;
};

struct CoverResult {
  IndexList chosen;     // set indices in greedy pick order
  IndexList covered;    // sorted
  IndexList uncovered;  // sorted
};

// Picks the set with the most not-yet-covered elements (lowest index on
// ties) until the universe is covered. Throws InputError when some element
// belongs to no set.
CoverResult greedy_set_cover(const SetSystem& sys);

// Same rule, stopping after min(beta, m) picks or as soon as no set adds a
// new element.
CoverResult greedy_budgeted_max_coverage(const SetSystem& sys, Index beta);

// H_n = 1 + 1/2 + ... + 1/n.
double harmonic_number(Index n);

}  // namespace exclust

#endif  // EXCLUST_COVERAGE_HPP_
