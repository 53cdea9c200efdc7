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

#include "exclust/stats.hpp"

#include <cmath>
#include <string>

#include "exclust/coverage.hpp"

namespace exclust {

SolutionReport summarize(const DistanceMatrix& dm,
                         const ClusteringSolution& sol,
                         const std::optional<OracleResult>& oracle) {
  if (sol.size() != dm.size()) {
    throw InputError("solution covers " + std::to_string(sol.size()) +
                     " instances but distance matrix has " +
                     std::to_string(dm.size()));
  }
  SolutionReport report;
  report.timing = sol.timings;
  report.per_cluster.reserve(sol.clusters.size());

  auto& global = report.global;
  global.n = sol.size();
  for (std::size_t j = 0; j < sol.clusters.size(); ++j) {
    const auto& members = sol.clusters[j];
    ClusterSummary c;
    c.size = static_cast<Index>(members.size());
    c.exemplar_count = static_cast<Index>(sol.exemplars[j].size());
    c.diameter = group_diameter(dm, members);
    c.empty = members.empty();
    if (!members.empty()) {
      double sum = 0.0;
      for (Index i : members) {
        sum += dm(i, sol.covered_by[static_cast<std::size_t>(i)]);
      }
      c.mean_exemplar_distance = sum / static_cast<double>(members.size());
    }
    global.max_diameter = std::max(global.max_diameter, c.diameter);
    global.total_exemplars += c.exemplar_count;
    global.covered_count += c.size;
    if (c.empty) ++global.empty_clusters;
    report.per_cluster.push_back(c);
  }
  global.covered_fraction = static_cast<double>(global.covered_count) /
                            static_cast<double>(global.n);
  global.uncovered = sol.uncovered;

  if (oracle) {
    ApproximationRatios r;
    if (oracle->diameter) {
      r.d_star = oracle->diameter->d_star;
      r.diameter = global.max_diameter /
                   (2.0 * (oracle->diameter->d_star + sol.params.epsilon));
    }
    if (oracle->exemplars) {
      r.n_star = oracle->exemplars->n_star;
      r.exemplars = static_cast<double>(global.total_exemplars) /
                    static_cast<double>(oracle->exemplars->n_star);
    }
    if (oracle->coverage) {
      r.q_star = oracle->coverage->q_star;
      r.coverage = static_cast<double>(global.covered_count) /
                   static_cast<double>(oracle->coverage->q_star);
    }
    report.ratios = r;
  }
  return report;
}

std::vector<std::string> check_bounds(const SolutionReport& report,
                                      const ClusteringSolution& sol) {
  std::vector<std::string> violations;
  if (!report.ratios) return violations;
  const auto& r = *report.ratios;
  const auto& g = report.global;
  if (r.d_star && g.max_diameter > 2.0 * (*r.d_star + sol.params.epsilon)) {
    violations.push_back("max diameter " + std::to_string(g.max_diameter) +
                         " exceeds 2(D* + epsilon) = " +
                         std::to_string(2.0 * (*r.d_star + sol.params.epsilon)));
  }
  if (r.n_star && !sol.is_sccrb() &&
      static_cast<double>(g.total_exemplars) >
          harmonic_number(g.n) * static_cast<double>(*r.n_star)) {
    violations.push_back("exemplar count " + std::to_string(g.total_exemplars) +
                         " exceeds H_n * N* = " +
                         std::to_string(harmonic_number(g.n) * *r.n_star));
  }
  if (r.q_star && sol.is_sccrb() &&
      static_cast<double>(g.covered_count) <
          (1.0 - 1.0 / std::exp(1.0)) * static_cast<double>(*r.q_star)) {
    violations.push_back("covered count " + std::to_string(g.covered_count) +
                         " below (1 - 1/e) Q*, Q* = " +
                         std::to_string(*r.q_star));
  }
  if (sol.is_sccrb() && g.total_exemplars > *sol.params.beta) {
    violations.push_back("exemplar count exceeds beta");
  }
  return violations;
}

}  // namespace exclust
