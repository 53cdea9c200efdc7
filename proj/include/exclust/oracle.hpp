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

// Exhaustive solvers for small instances: the optimal k-clustering
// diameter D*, the minimum exemplar count N* and the best beta-budget
// coverage Q*. Every approximation bound in the library is checked against
// these.

#ifndef EXCLUST_ORACLE_HPP_
#define EXCLUST_ORACLE_HPP_

#include <optional>

#include "exclust/core.hpp"
#include "exclust/coverage.hpp"

namespace exclust {

// Thrown when an exhaustive search is refused because of instance size.
class SizeLimitError : public InputError {
 public:
  using InputError::InputError;
};

struct OracleLimits {
  static constexpr Index kMaxDiameterN = 14;
  static constexpr Index kMaxDiameterK = 3;
  static constexpr Index kMaxCoverN = 20;
  static constexpr Index kMaxCoverageBeta = 5;
  // Set-system variants use 64-bit element masks.
  static constexpr Index kMaxUniverse = 64;
};

struct DiameterOptimum {
  double d_star = 0.0;
  IndexList assignment;  // cluster id per instance, exactly k non-empty

  bool operator==(const DiameterOptimum&) const = default;
};

struct ExemplarOptimum {
  Index n_star = 0;
  IndexList witness;  // sorted set (instance) indices

  bool operator==(const ExemplarOptimum&) const = default;
};

struct CoverageOptimum {
  Index beta = 0;
  Index q_star = 0;
  IndexList witness;

  bool operator==(const CoverageOptimum&) const = default;
};

struct OracleResult {
  std::optional<DiameterOptimum> diameter;
  std::optional<ExemplarOptimum> exemplars;
  std::optional<CoverageOptimum> coverage;

  bool operator==(const OracleResult&) const = default;
};

// Branch and bound over canonical labelings (instance 0 in cluster 0, each
// new cluster opened in order). Branches whose partial diameter reaches the
// incumbent are cut, so the returned witness is the lexicographically
// smallest optimal labeling. Requires n <= 14 and k <= 3.
DiameterOptimum exact_min_diameter(const DistanceMatrix& dm, Index k);

// Smallest subcollection covering the universe, enumerated by increasing
// size in lexicographic order. Requires m <= 20.
ExemplarOptimum exact_min_set_cover(const SetSystem& sys);
ExemplarOptimum exact_min_exemplars(const NeighborhoodSets& neigh);

// Largest union of at most beta sets. Requires m <= 20 and beta <= 5.
CoverageOptimum exact_max_coverage(const SetSystem& sys, Index beta);
CoverageOptimum exact_max_coverage(const NeighborhoodSets& neigh, Index beta);

// Runs every solver whose size limits admit the instance; the rest stay
// empty. Never throws SizeLimitError.
OracleResult solve_within_limits(const DistanceMatrix& dm, Index k,
                                 Epsilon eps, std::optional<Index> beta);

}  // namespace exclust

#endif  // EXCLUST_ORACLE_HPP_
