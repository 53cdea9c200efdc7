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

// Simultaneous clustering and exemplar selection.
//
// Both pipelines share one shape:
//   1. farthest-first blocks B_0..B_{k-1};
//   2. epsilon-neighborhoods S_i;
//   3. an exemplar set A from greedy set cover (SCCE) or greedy budgeted
//      coverage (SCCRB) over {S_i};
//   4-5. E_j = B_j intersect A seeds cluster C_j;
//   6. every non-exemplar covered by A joins the cluster of one covering
//      exemplar.
// Exemplars never leave their block. Since blocks have diameter <= 2 D* and
// every moved instance sits within epsilon of an exemplar of its new
// cluster, each cluster has diameter <= 2 (D* + epsilon) under a metric.

#ifndef EXCLUST_PIPELINE_HPP_
#define EXCLUST_PIPELINE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "exclust/core.hpp"
#include "exclust/gonzalez.hpp"

namespace exclust {

// Marks covered_by entries of instances with no exemplar (SCCRB only).
inline constexpr Index kUncovered = -1;

struct SolutionParams {
  Index k = 0;
  double epsilon = 0.0;
  std::optional<Index> beta;  // present iff SCCRB
  MetricKind metric = MetricKind::kEuclidean;
  Index seed_index = 0;

  bool operator==(const SolutionParams&) const = default;
};

// Wall-clock milliseconds per step, monotonic clock. Not deterministic and
// never part of equality.
struct StepTimings {
  double distances_ms = 0.0;
  double partition_ms = 0.0;
  double neighborhoods_ms = 0.0;
  double selection_ms = 0.0;
  double assignment_ms = 0.0;
  double total_ms = 0.0;
};

struct ClusteringSolution {
  SolutionParams params;
  BlockPartition blocks;
  // clusters[j] and exemplars[j] are sorted; exemplars[j] is a subset of
  // clusters[j]. A cluster may be empty when no exemplar fell in its block.
  std::vector<IndexList> clusters;
  std::vector<IndexList> exemplars;
  // covered_by[i] is the exemplar explaining i (i itself for exemplars), or
  // kUncovered.
  IndexList covered_by;
  IndexList uncovered;
  StepTimings timings;

  Index size() const { return static_cast<Index>(covered_by.size()); }
  bool is_sccrb() const { return params.beta.has_value(); }
  Index total_exemplars() const;
  Index covered_count() const { return size() - static_cast<Index>(uncovered.size()); }

  // Structural equality; timings are ignored.
  bool operator==(const ClusteringSolution& other) const;
};

struct PipelineOptions {
  Index seed_index = 0;
  // Recorded in the solution; the distances themselves come from the caller.
  MetricKind metric = MetricKind::kEuclidean;
  int threads = 1;
};

ClusteringSolution run_scce(const Dataset& dataset, const DistanceMatrix& dm,
                            Index k, Epsilon eps,
                            const PipelineOptions& options = {});

ClusteringSolution run_sccrb(const Dataset& dataset, const DistanceMatrix& dm,
                             Index k, Epsilon eps, Index beta,
                             const PipelineOptions& options = {});

// Max diameter over the final clusters (covered members only).
double max_diameter(const DistanceMatrix& dm, const ClusteringSolution& sol);

struct VerificationCheck {
  std::string name;
  std::vector<std::string> violations;

  bool passed() const { return violations.empty(); }
};

struct VerificationReport {
  std::vector<VerificationCheck> checks;

  bool ok() const;
  Index violation_count() const;
  const VerificationCheck* find(std::string_view name) const;
};

// Structural checks that need no oracle: "partition", "exemplars_in_cluster",
// "exemplar_disjointness", "coverage_within_epsilon", "exemplars_not_moved",
// "uncovered_exact", "budget", "complete". Never throws on a malformed
// solution; problems become violations.
VerificationReport verify_solution(const DistanceMatrix& dm,
                                   const ClusteringSolution& sol);

}  // namespace exclust

#endif  // EXCLUST_PIPELINE_HPP_
