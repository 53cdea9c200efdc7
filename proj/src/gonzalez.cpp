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

#include "exclust/gonzalez.hpp"

#include <limits>
#include <string>

namespace exclust {

std::vector<IndexList> BlockPartition::blocks() const {
  std::vector<IndexList> out(static_cast<std::size_t>(k));
  for (Index i = 0; i < size(); ++i) {
    out[static_cast<std::size_t>(assignment[static_cast<std::size_t>(i)])]
        .push_back(i);
  }
  return out;
}

BlockPartition farthest_first_partition(const DistanceMatrix& dm, Index k,
                                        Index seed_index) {
  const Index n = dm.size();
  if (k < 1) throw InputError("k must be >= 1");
  if (k > n) {
    throw InputError("k = " + std::to_string(k) + " exceeds instance count " +
                     std::to_string(n));
  }
  if (seed_index < 0 || seed_index >= n) {
    throw InputError("seed_index " + std::to_string(seed_index) +
                     " out of range");
  }

  BlockPartition out;
  out.k = k;
  out.assignment.assign(static_cast<std::size_t>(n), 0);
  out.heads.reserve(static_cast<std::size_t>(k));

  std::vector<double> nearest(static_cast<std::size_t>(n),
                              std::numeric_limits<double>::infinity());
  std::vector<bool> is_head(static_cast<std::size_t>(n), false);

  Index head = seed_index;
  for (Index block = 0; block < k; ++block) {
    out.heads.push_back(head);
    is_head[static_cast<std::size_t>(head)] = true;
    out.assignment[static_cast<std::size_t>(head)] = block;
    nearest[static_cast<std::size_t>(head)] = 0.0;

    const double* col = dm.entries().col(head).data();
    Index farthest = -1;
    double farthest_dist = -1.0;
    for (Index i = 0; i < n; ++i) {
      const auto u = static_cast<std::size_t>(i);
      if (is_head[u]) continue;
      if (col[i] < nearest[u]) {
        nearest[u] = col[i];
        out.assignment[u] = block;
      }
      if (nearest[u] > farthest_dist) {
        farthest_dist = nearest[u];
        farthest = i;
      }
    }
    head = farthest;
  }
  return out;
}

double group_diameter(const DistanceMatrix& dm, std::span<const Index> group) {
  double diameter = 0.0;
  for (std::size_t a = 0; a < group.size(); ++a) {
    for (std::size_t b = a + 1; b < group.size(); ++b) {
      diameter = std::max(diameter, dm(group[a], group[b]));
    }
  }
  return diameter;
}

double max_diameter(const DistanceMatrix& dm,
                    std::span<const IndexList> groups) {
  double diameter = 0.0;
  for (const auto& g : groups) {
    for (Index i : g) {
      if (i < 0 || i >= dm.size()) {
        throw InputError("instance index " + std::to_string(i) +
                         " out of range");
      }
    }
    diameter = std::max(diameter, group_diameter(dm, g));
  }
  return diameter;
}

double max_diameter(const DistanceMatrix& dm, const BlockPartition& partition) {
  if (partition.size() != dm.size()) {
    throw InputError("partition size does not match distance matrix");
  }
  const auto blocks = partition.blocks();
  return max_diameter(dm, blocks);
}

}  // namespace exclust
