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

#include "exclust/oracle.hpp"

#include <bit>
#include <cstdint>
#include <limits>
#include <string>

namespace exclust {

namespace {

using Mask = std::uint64_t;

std::vector<Mask> to_masks(const SetSystem& sys) {
  if (sys.universe_size() > OracleLimits::kMaxUniverse) {
    throw SizeLimitError("universe of " + std::to_string(sys.universe_size()) +
                         " elements exceeds exhaustive limit " +
                         std::to_string(OracleLimits::kMaxUniverse));
  }
  std::vector<Mask> masks;
  masks.reserve(sys.sets().size());
  for (const auto& members : sys.sets()) {
    Mask m = 0;
    for (Index e : members) m |= Mask{1} << e;
    masks.push_back(m);
  }
  return masks;
}

Mask full_mask(Index universe) {
  return universe == 64 ? ~Mask{0} : (Mask{1} << universe) - 1;
}

// Visits r-combinations of {0..m-1} in lexicographic order until visit
// returns true. Returns whether it stopped early.
template <typename Visit>
bool for_each_combination(Index m, Index r, std::vector<Index>& combo,
                          Visit&& visit) {
  combo.resize(static_cast<std::size_t>(r));
  if (r > m) return false;
  for (Index i = 0; i < r; ++i) combo[static_cast<std::size_t>(i)] = i;
  while (true) {
    if (visit(combo)) return true;
    Index pos = r - 1;
    while (pos >= 0 && combo[static_cast<std::size_t>(pos)] == m - r + pos) {
      --pos;
    }
    if (pos < 0) return false;
    ++combo[static_cast<std::size_t>(pos)];
    for (Index i = pos + 1; i < r; ++i) {
      combo[static_cast<std::size_t>(i)] =
          combo[static_cast<std::size_t>(i - 1)] + 1;
    }
  }
}

class DiameterSearch {
 public:
  DiameterSearch(const DistanceMatrix& dm, Index k)
      : dm_(dm), n_(dm.size()), k_(k),
        labels_(static_cast<std::size_t>(n_), 0),
        members_(static_cast<std::size_t>(k_)) {}

  DiameterOptimum run() {
    descend(0, 0, 0.0);
    return {best_, best_labels_};
  }

 private:
  void descend(Index i, Index used, double diameter) {
    if (i == n_) {
      if (used == k_ && diameter < best_) {
        best_ = diameter;
        best_labels_ = labels_;
      }
      return;
    }
    // Leave enough instances to open the remaining clusters.
    if (n_ - i < k_ - used) return;
    const Index limit = std::min(used + 1, k_);
    for (Index c = 0; c < limit; ++c) {
      auto& group = members_[static_cast<std::size_t>(c)];
      double next = diameter;
      for (Index m : group) next = std::max(next, dm_(i, m));
      if (next >= best_) continue;
      labels_[static_cast<std::size_t>(i)] = c;
      group.push_back(i);
      descend(i + 1, c == used ? used + 1 : used, next);
      group.pop_back();
    }
  }

  const DistanceMatrix& dm_;
  Index n_;
  Index k_;
  IndexList labels_;
  std::vector<IndexList> members_;
  double best_ = std::numeric_limits<double>::infinity();
  IndexList best_labels_;
};

}  // namespace

DiameterOptimum exact_min_diameter(const DistanceMatrix& dm, Index k) {
  const Index n = dm.size();
  if (k < 1 || k > n) throw InputError("k must satisfy 1 <= k <= n");
  if (n > OracleLimits::kMaxDiameterN || k > OracleLimits::kMaxDiameterK) {
    throw SizeLimitError("exact diameter search limited to n <= " +
                         std::to_string(OracleLimits::kMaxDiameterN) +
                         " and k <= " +
                         std::to_string(OracleLimits::kMaxDiameterK) +
                         " (got n = " + std::to_string(n) +
                         ", k = " + std::to_string(k) + ")");
  }
  return DiameterSearch(dm, k).run();
}

ExemplarOptimum exact_min_set_cover(const SetSystem& sys) {
  const Index m = sys.num_sets();
  if (m > OracleLimits::kMaxCoverN) {
    throw SizeLimitError("exact set cover limited to " +
                         std::to_string(OracleLimits::kMaxCoverN) +
                         " sets (got " + std::to_string(m) + ")");
  }
  const auto masks = to_masks(sys);
  const Mask full = full_mask(sys.universe_size());
  ExemplarOptimum out;
  if (full == 0) return out;
  std::vector<Index> combo;
  for (Index r = 1; r <= m; ++r) {
    const bool found = for_each_combination(m, r, combo, [&](const auto& c) {
      Mask u = 0;
      for (Index s : c) u |= masks[static_cast<std::size_t>(s)];
      return u == full;
    });
    if (found) {
      out.n_star = r;
      out.witness.assign(combo.begin(), combo.end());
      return out;
    }
  }
  throw InputError("universe not coverable by the given sets");
}

ExemplarOptimum exact_min_exemplars(const NeighborhoodSets& neigh) {
  return exact_min_set_cover(SetSystem(neigh.size(), neigh.sets()));
}

CoverageOptimum exact_max_coverage(const SetSystem& sys, Index beta) {
  const Index m = sys.num_sets();
  if (beta < 1) throw InputError("beta must be >= 1");
  if (m > OracleLimits::kMaxCoverN || beta > OracleLimits::kMaxCoverageBeta) {
    throw SizeLimitError("exact max coverage limited to " +
                         std::to_string(OracleLimits::kMaxCoverN) +
                         " sets and beta <= " +
                         std::to_string(OracleLimits::kMaxCoverageBeta) +
                         " (got m = " + std::to_string(m) +
                         ", beta = " + std::to_string(beta) + ")");
  }
  const auto masks = to_masks(sys);
  CoverageOptimum out;
  out.beta = beta;
  std::vector<Index> combo;
  // Adding a set never shrinks a union, so only size min(beta, m) matters.
  for_each_combination(m, std::min(beta, m), combo, [&](const auto& c) {
    Mask u = 0;
    for (Index s : c) u |= masks[static_cast<std::size_t>(s)];
    const auto count = static_cast<Index>(std::popcount(u));
    if (out.witness.empty() || count > out.q_star) {
      out.q_star = count;
      out.witness.assign(c.begin(), c.end());
    }
    return false;
  });
  return out;
}

CoverageOptimum exact_max_coverage(const NeighborhoodSets& neigh, Index beta) {
  return exact_max_coverage(SetSystem(neigh.size(), neigh.sets()), beta);
}

OracleResult solve_within_limits(const DistanceMatrix& dm, Index k,
                                 Epsilon eps, std::optional<Index> beta) {
  OracleResult out;
  const Index n = dm.size();
  if (n <= OracleLimits::kMaxDiameterN && k >= 1 &&
      k <= std::min(n, OracleLimits::kMaxDiameterK)) {
    out.diameter = exact_min_diameter(dm, k);
  }
  if (n <= OracleLimits::kMaxCoverN) {
    const auto neigh = build_neighborhoods(dm, eps);
    out.exemplars = exact_min_exemplars(neigh);
    if (beta && *beta >= 1 && *beta <= OracleLimits::kMaxCoverageBeta) {
      out.coverage = exact_max_coverage(neigh, *beta);
    }
  }
  return out;
}

}  // namespace exclust
