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

#include "exclust/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <string>

#include "exclust/coverage.hpp"

namespace exclust {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since)
      .count();
}

enum class Selection { kSetCover, kBudgeted };

void check_common(const Dataset& dataset, const DistanceMatrix& dm, Index k) {
  if (dataset.size() != dm.size()) {
    throw InputError("dataset has " + std::to_string(dataset.size()) +
                     " instances but distance matrix is " +
                     std::to_string(dm.size()) + "x" +
                     std::to_string(dm.size()));
  }
  if (k < 1 || k > dm.size()) {
    throw InputError("k must satisfy 1 <= k <= n (k = " + std::to_string(k) +
                     ", n = " + std::to_string(dm.size()) + ")");
  }
}

ClusteringSolution run_pipeline(const DistanceMatrix& dm, Index k, Epsilon eps,
                                 std::optional<Index> beta,
                                 const PipelineOptions& options) {
  const Index n = dm.size();
  const auto total_start = Clock::now();

  ClusteringSolution sol;
  sol.params = {k, eps.value(), beta, options.metric, options.seed_index};

  auto start = Clock::now();
  sol.blocks = farthest_first_partition(dm, k, options.seed_index);
  sol.timings.partition_ms = elapsed_ms(start);

  start = Clock::now();
  const NeighborhoodSets neigh = build_neighborhoods(dm, eps, options.threads);
  sol.timings.neighborhoods_ms = elapsed_ms(start);

  start = Clock::now();
  const SetSystem sys = SetSystem::from_neighborhoods(neigh);
  const CoverResult cover = beta ? greedy_budgeted_max_coverage(sys, *beta)
                                 : greedy_set_cover(sys);
  sol.timings.selection_ms = elapsed_ms(start);

  start = Clock::now();
  std::vector<bool> is_exemplar(static_cast<std::size_t>(n), false);
  for (Index e : cover.chosen) is_exemplar[static_cast<std::size_t>(e)] = true;

  sol.covered_by.assign(static_cast<std::size_t>(n), kUncovered);
  sol.clusters.assign(static_cast<std::size_t>(k), {});
  sol.exemplars.assign(static_cast<std::size_t>(k), {});

  for (Index i = 0; i < n; ++i) {
    const auto u = static_cast<std::size_t>(i);
    if (is_exemplar[u]) {
      const auto block =
          static_cast<std::size_t>(sol.blocks.assignment[u]);
      sol.exemplars[block].push_back(i);
      sol.clusters[block].push_back(i);
      sol.covered_by[u] = i;
      continue;
    }
    // Nearest covering exemplar; S_i is sorted so the first minimum found
    // is the lowest index.
    Index best = kUncovered;
    double best_dist = 0.0;
    for (Index e : neigh[i]) {
      if (!is_exemplar[static_cast<std::size_t>(e)]) continue;
      if (best == kUncovered || dm(i, e) < best_dist) {
        best = e;
        best_dist = dm(i, e);
      }
    }
    if (best == kUncovered) {
      sol.uncovered.push_back(i);
      continue;
    }
    sol.covered_by[u] = best;
    sol.clusters[static_cast<std::size_t>(
                     sol.blocks.assignment[static_cast<std::size_t>(best)])]
        .push_back(i);
  }
  sol.timings.assignment_ms = elapsed_ms(start);
  sol.timings.total_ms = elapsed_ms(total_start);
  return sol;
}

}  // namespace

Index ClusteringSolution::total_exemplars() const {
  Index total = 0;
  for (const auto& e : exemplars) total += static_cast<Index>(e.size());
  return total;
}

bool ClusteringSolution::operator==(const ClusteringSolution& other) const {
  return params == other.params && blocks == other.blocks &&
         clusters == other.clusters && exemplars == other.exemplars &&
         covered_by == other.covered_by && uncovered == other.uncovered;
}

ClusteringSolution run_scce(const Dataset& dataset, const DistanceMatrix& dm,
                            Index k, Epsilon eps,
                            const PipelineOptions& options) {
  check_common(dataset, dm, k);
  return run_pipeline(dm, k, eps, std::nullopt, options);
}

ClusteringSolution run_sccrb(const Dataset& dataset, const DistanceMatrix& dm,
                             Index k, Epsilon eps, Index beta,
                             const PipelineOptions& options) {
  check_common(dataset, dm, k);
  if (beta < 1 || beta > dm.size()) {
    throw InputError("beta must satisfy 1 <= beta <= n (beta = " +
                     std::to_string(beta) + ")");
  }
  return run_pipeline(dm, k, eps, beta, options);
}

double max_diameter(const DistanceMatrix& dm, const ClusteringSolution& sol) {
  return max_diameter(dm, std::span<const IndexList>(sol.clusters));
}

bool VerificationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const auto& c) { return c.passed(); });
}

Index VerificationReport::violation_count() const {
  Index total = 0;
  for (const auto& c : checks) total += static_cast<Index>(c.violations.size());
  return total;
}

const VerificationCheck* VerificationReport::find(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

VerificationReport verify_solution(const DistanceMatrix& dm,
                                   const ClusteringSolution& sol) {
  const Index n = dm.size();
  const auto un = static_cast<std::size_t>(n);
  const Index k = sol.params.k;
  auto in_range = [n](Index i) { return i >= 0 && i < n; };
  auto str = [](auto v) { return std::to_string(v); };

  VerificationReport report;
  report.checks.reserve(8);  // references below must stay valid
  auto& partition = report.checks.emplace_back(VerificationCheck{"partition", {}});

  // Shape problems make the remaining checks meaningless.
  if (static_cast<Index>(sol.covered_by.size()) != n) {
    partition.violations.push_back("covered_by has " +
                                   str(sol.covered_by.size()) +
                                   " entries, expected " + str(n));
  }
  if (sol.blocks.size() != n) {
    partition.violations.push_back("block assignment has " +
                                   str(sol.blocks.size()) + " entries");
  }
  if (static_cast<Index>(sol.clusters.size()) != k ||
      static_cast<Index>(sol.exemplars.size()) != k) {
    partition.violations.push_back("expected " + str(k) +
                                   " clusters and exemplar sets");
  }
  if (!partition.passed()) return report;

  std::vector<Index> owner(un, kUncovered);
  std::vector<int> seen(un, 0);
  for (Index j = 0; j < k; ++j) {
    for (Index i : sol.clusters[static_cast<std::size_t>(j)]) {
      if (!in_range(i)) {
        partition.violations.push_back("cluster " + str(j) +
                                       " holds out-of-range index " + str(i));
        continue;
      }
      ++seen[static_cast<std::size_t>(i)];
      owner[static_cast<std::size_t>(i)] = j;
    }
  }
  std::vector<bool> listed_uncovered(un, false);
  for (Index i : sol.uncovered) {
    if (!in_range(i)) {
      partition.violations.push_back("uncovered holds out-of-range index " +
                                     str(i));
      continue;
    }
    ++seen[static_cast<std::size_t>(i)];
    listed_uncovered[static_cast<std::size_t>(i)] = true;
  }
  for (Index i = 0; i < n; ++i) {
    const int count = seen[static_cast<std::size_t>(i)];
    if (count != 1) {
      partition.violations.push_back("instance " + str(i) + " appears " +
                                     str(count) + " times");
    }
  }

  auto& subset = report.checks.emplace_back(
      VerificationCheck{"exemplars_in_cluster", {}});
  auto& disjoint = report.checks.emplace_back(
      VerificationCheck{"exemplar_disjointness", {}});
  auto& not_moved = report.checks.emplace_back(
      VerificationCheck{"exemplars_not_moved", {}});
  std::vector<Index> exemplar_of(un, kUncovered);
  for (Index j = 0; j < k; ++j) {
    const auto& cluster = sol.clusters[static_cast<std::size_t>(j)];
    for (Index e : sol.exemplars[static_cast<std::size_t>(j)]) {
      if (!in_range(e)) {
        subset.violations.push_back("exemplar index " + str(e) +
                                    " out of range");
        continue;
      }
      const auto u = static_cast<std::size_t>(e);
      if (std::find(cluster.begin(), cluster.end(), e) == cluster.end()) {
        subset.violations.push_back("exemplar " + str(e) +
                                    " is not a member of cluster " + str(j));
      }
      if (exemplar_of[u] != kUncovered) {
        disjoint.violations.push_back("exemplar " + str(e) +
                                      " shared by clusters " +
                                      str(exemplar_of[u]) + " and " + str(j));
      } else {
        exemplar_of[u] = j;
      }
      if (sol.blocks.assignment[u] != j) {
        not_moved.violations.push_back(
            "exemplar " + str(e) + " left block " +
            str(sol.blocks.assignment[u]) + " for cluster " + str(j));
      }
    }
  }

  const double eps = sol.params.epsilon;
  auto& coverage = report.checks.emplace_back(
      VerificationCheck{"coverage_within_epsilon", {}});
  for (Index i = 0; i < n; ++i) {
    const auto u = static_cast<std::size_t>(i);
    const Index cluster = owner[u];
    if (cluster == kUncovered) continue;
    const Index e = sol.covered_by[u];
    if (!in_range(e)) {
      coverage.violations.push_back("clustered instance " + str(i) +
                                    " has no covering exemplar");
      continue;
    }
    if (exemplar_of[static_cast<std::size_t>(e)] != cluster) {
      coverage.violations.push_back("instance " + str(i) + " in cluster " +
                                    str(cluster) + " is covered by " + str(e) +
                                    ", not an exemplar of that cluster");
    }
    if (exemplar_of[u] != kUncovered && e != i) {
      coverage.violations.push_back("exemplar " + str(i) +
                                    " does not cover itself");
    }
    if (!(dm(i, e) <= eps)) {
      coverage.violations.push_back("instance " + str(i) + " is " +
                                    str(dm(i, e)) + " from exemplar " + str(e) +
                                    " (epsilon " + str(eps) + ")");
    }
  }

  auto& exact = report.checks.emplace_back(
      VerificationCheck{"uncovered_exact", {}});
  for (Index i = 0; i < n; ++i) {
    const auto u = static_cast<std::size_t>(i);
    if (!listed_uncovered[u]) continue;
    if (sol.covered_by[u] != kUncovered) {
      exact.violations.push_back("uncovered instance " + str(i) +
                                 " has covered_by " + str(sol.covered_by[u]));
    }
    for (Index e = 0; e < n; ++e) {
      if (exemplar_of[static_cast<std::size_t>(e)] != kUncovered &&
          dm(i, e) <= eps) {
        exact.violations.push_back("uncovered instance " + str(i) +
                                   " lies within epsilon of exemplar " +
                                   str(e));
        break;
      }
    }
  }

  auto& budget = report.checks.emplace_back(VerificationCheck{"budget", {}});
  if (sol.params.beta && sol.total_exemplars() > *sol.params.beta) {
    budget.violations.push_back(str(sol.total_exemplars()) +
                                " exemplars exceed beta " +
                                str(*sol.params.beta));
  }

  auto& complete = report.checks.emplace_back(VerificationCheck{"complete", {}});
  if (!sol.is_sccrb() && !sol.uncovered.empty()) {
    complete.violations.push_back(str(sol.uncovered.size()) +
                                  " instances lack an exemplar");
  }
  return report;
}

}  // namespace exclust
