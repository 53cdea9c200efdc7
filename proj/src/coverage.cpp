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

#include "exclust/coverage.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>
#include <utility>

namespace exclust {

SetSystem::SetSystem(Index universe_size, std::vector<IndexList> sets)
    : universe_size_(universe_size), sets_(std::move(sets)) {
  if (universe_size_ < 0) throw InputError("universe size must be >= 0");
  for (std::size_t s = 0; s < sets_.size(); ++s) {
    auto& members = sets_[s];
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (!members.empty() &&
        (members.front() < 0 || members.back() >= universe_size_)) {
      throw InputError("set " + std::to_string(s) +
                       " has a member outside the universe");
    }
  }
}

SetSystem SetSystem::from_neighborhoods(const NeighborhoodSets& neigh) {
  // Neighborhoods are already sorted, unique and in range.
  SetSystem sys;
  sys.universe_size_ = neigh.size();
  sys.sets_ = neigh.sets();
  return sys;
}

namespace {

CoverResult run_greedy(const SetSystem& sys, Index budget) {
  const Index n = sys.universe_size();
  const Index m = sys.num_sets();

  // containing[e] lists the sets that hold element e.
  std::vector<IndexList> containing(static_cast<std::size_t>(n));
  std::vector<Index> gain(static_cast<std::size_t>(m));
  for (Index s = 0; s < m; ++s) {
    const auto& members = sys.set(s);
    gain[static_cast<std::size_t>(s)] = static_cast<Index>(members.size());
    for (Index e : members) containing[static_cast<std::size_t>(e)].push_back(s);
  }

  // Lazy max-heap keyed on (gain, -index). Gains only decrease, so a popped
  // entry whose stored gain is still current is the true maximum, and the
  // key order makes it the lowest index among equal gains.
  using Entry = std::pair<Index, Index>;
  std::priority_queue<Entry> heap;
  for (Index s = 0; s < m; ++s) {
    if (gain[static_cast<std::size_t>(s)] > 0) {
      heap.emplace(gain[static_cast<std::size_t>(s)], -s);
    }
  }

  CoverResult out;
  std::vector<bool> covered(static_cast<std::size_t>(n), false);
  Index covered_count = 0;
  while (static_cast<Index>(out.chosen.size()) < budget && covered_count < n &&
         !heap.empty()) {
    const auto [stored, neg] = heap.top();
    heap.pop();
    const Index s = -neg;
    const Index current = gain[static_cast<std::size_t>(s)];
    if (stored != current) {
      if (current > 0) heap.emplace(current, neg);
      continue;
    }
    out.chosen.push_back(s);
    for (Index e : sys.set(s)) {
      const auto u = static_cast<std::size_t>(e);
      if (covered[u]) continue;
      covered[u] = true;
      ++covered_count;
      for (Index t : containing[u]) --gain[static_cast<std::size_t>(t)];
    }
  }

  for (Index e = 0; e < n; ++e) {
    (covered[static_cast<std::size_t>(e)] ? out.covered : out.uncovered)
        .push_back(e);
  }
  return out;
}

}  // namespace

CoverResult greedy_set_cover(const SetSystem& sys) {
  std::vector<bool> reachable(static_cast<std::size_t>(sys.universe_size()),
                              false);
  for (const auto& members : sys.sets()) {
    for (Index e : members) reachable[static_cast<std::size_t>(e)] = true;
  }
  for (Index e = 0; e < sys.universe_size(); ++e) {
    if (!reachable[static_cast<std::size_t>(e)]) {
      throw InputError("universe not coverable: element " + std::to_string(e) +
                       " belongs to no set");
    }
  }
  return run_greedy(sys, std::numeric_limits<Index>::max());
}

CoverResult greedy_budgeted_max_coverage(const SetSystem& sys, Index beta) {
  if (beta < 1) throw InputError("beta must be >= 1");
  return run_greedy(sys, std::min(beta, sys.num_sets()));
}

double harmonic_number(Index n) {
  double h = 0.0;
  for (Index i = 1; i <= n; ++i) h += 1.0 / static_cast<double>(i);
  return h;
}

}  // namespace exclust
