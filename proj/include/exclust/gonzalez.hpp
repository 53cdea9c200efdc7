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

// Farthest-point-first k-center partitioning.

#ifndef EXCLUST_GONZALEZ_HPP_
#define EXCLUST_GONZALEZ_HPP_

#include <span>
#include <vector>

#include "exclust/core.hpp"

namespace exclust {

// Disjoint blocks B_0..B_{k-1} covering every instance. heads[j] seeds block
// j; heads are listed in the order the sweep picked them.
struct BlockPartition {
  Index k = 0;
  IndexList assignment;
  IndexList heads;

  Index size() const { return static_cast<Index>(assignment.size()); }
  std::vector<IndexList> blocks() const;

  bool operator==(const BlockPartition&) const = default;
};

// head_0 = seed_index; each later head is the instance farthest from its
// nearest chosen head (lowest index among ties). Every instance joins its
// nearest head, the earliest-chosen head on ties; a head always owns itself,
// which matters only when instances coincide. O(nk) time.
BlockPartition farthest_first_partition(const DistanceMatrix& dm, Index k,
                                        Index seed_index = 0);

// Largest pairwise distance within one group; 0 for empty or singleton.
double group_diameter(const DistanceMatrix& dm, std::span<const Index> group);

// Largest group diameter.
double max_diameter(const DistanceMatrix& dm,
                    std::span<const IndexList> groups);
double max_diameter(const DistanceMatrix& dm, const BlockPartition& partition);

}  // namespace exclust

#endif  // EXCLUST_GONZALEZ_HPP_
