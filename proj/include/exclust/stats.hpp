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

#ifndef EXCLUST_STATS_HPP_
#define EXCLUST_STATS_HPP_

#include <optional>
#include <vector>

#include "exclust/core.hpp"
#include "exclust/oracle.hpp"
#include "exclust/pipeline.hpp"

namespace exclust {

struct ClusterSummary {
  Index size = 0;
  Index exemplar_count = 0;
  double diameter = 0.0;
  // Mean d(x, covered_by[x]) over members; exemplars contribute 0.
  double mean_exemplar_distance = 0.0;
  bool empty = false;

  bool operator==(const ClusterSummary&) const = default;
};

struct GlobalSummary {
  Index n = 0;
  double max_diameter = 0.0;
  Index total_exemplars = 0;
  Index covered_count = 0;
  double covered_fraction = 0.0;
  Index empty_clusters = 0;
  IndexList uncovered;

  bool operator==(const GlobalSummary&) const = default;
};

// Each ratio is present iff the matching oracle value was supplied.
//   diameter: max_diameter / (2 (D* + epsilon)), <= 1 by the diameter bound
//   exemplars: total_exemplars / N*, <= H_n for SCCE
//   coverage: covered / Q*, >= 1 - 1/e for SCCRB
struct ApproximationRatios {
  std::optional<double> d_star;
  std::optional<Index> n_star;
  std::optional<Index> q_star;
  std::optional<double> diameter;
  std::optional<double> exemplars;
  std::optional<double> coverage;

  bool operator==(const ApproximationRatios&) const = default;
};

struct SolutionReport {
  std::vector<ClusterSummary> per_cluster;
  GlobalSummary global;
  std::optional<ApproximationRatios> ratios;
  StepTimings timing;

  // Timing excluded.
  bool operator==(const SolutionReport& other) const {
    return per_cluster == other.per_cluster && global == other.global &&
           ratios == other.ratios;
  }
};

SolutionReport summarize(const DistanceMatrix& dm,
                         const ClusteringSolution& sol,
                         const std::optional<OracleResult>& oracle = {});

// Bound checks against oracle values; each returned string names a violated
// guarantee. Empty means every available bound holds.
std::vector<std::string> check_bounds(const SolutionReport& report,
                                      const ClusteringSolution& sol);

}  // namespace exclust

#endif  // EXCLUST_STATS_HPP_
