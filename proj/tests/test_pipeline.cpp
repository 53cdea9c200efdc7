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

#include <cmath>
#include <random>

#include "doctest.h"

#include "exclust/coverage.hpp"
#include "exclust/oracle.hpp"
#include "exclust/pipeline.hpp"
#include "test_util.hpp"

namespace exclust {
namespace {

using testing::line_points;

struct Line {
  Dataset dataset;
  DistanceMatrix dm;
};

Line make_line(std::initializer_list<double> xs) {
  auto points = line_points(xs);
  auto dm = compute_distances(points, MetricKind::kEuclidean);
  return {Dataset::from_vectors(std::move(points)), std::move(dm)};
}

TEST_CASE("scce on two separated pairs") {
  const auto line = make_line({0, 1, 10, 11});
  const auto sol = run_scce(line.dataset, line.dm, 2, Epsilon(1.0));
  CHECK(sol.blocks.blocks() == std::vector<IndexList>{{0, 1}, {2, 3}});
  CHECK(sol.exemplars == std::vector<IndexList>{{0}, {2}});
  CHECK(sol.clusters == std::vector<IndexList>{{0, 1}, {2, 3}});
  CHECK(sol.covered_by == IndexList{0, 0, 2, 2});
  CHECK(sol.uncovered.empty());
  CHECK(max_diameter(line.dm, sol) == 1.0);
  CHECK(max_diameter(line.dm, sol) <= 2.0 * (1.0 + 1.0));
  CHECK(verify_solution(line.dm, sol).ok());
  CHECK_FALSE(sol.is_sccrb());
}

TEST_CASE("scce with a single instance") {
  const auto line = make_line({42});
  const auto sol = run_scce(line.dataset, line.dm, 1, Epsilon(0.1));
  CHECK(sol.clusters == std::vector<IndexList>{{0}});
  CHECK(sol.exemplars == std::vector<IndexList>{{0}});
  CHECK(verify_solution(line.dm, sol).ok());
}

TEST_CASE("scce with epsilon beyond the data spread picks one exemplar") {
  const auto line = make_line({0, 3, 1, 2.5});
  const auto sol = run_scce(line.dataset, line.dm, 1, Epsilon(3.0));
  CHECK(sol.total_exemplars() == 1);
  CHECK(sol.clusters.front() == IndexList{0, 1, 2, 3});
}

TEST_CASE("sccrb leaves the far point unexplained") {
  const auto line = make_line({0, 0.5, 10, 10.5, 100});
  const auto sol = run_sccrb(line.dataset, line.dm, 2, Epsilon(1.0), 2);
  CHECK(sol.exemplars == std::vector<IndexList>{{0, 2}, {}});
  CHECK(sol.clusters == std::vector<IndexList>{{0, 1, 2, 3}, {}});
  CHECK(sol.uncovered == IndexList{4});
  CHECK(sol.covered_by[4] == kUncovered);
  CHECK(sol.covered_count() == 4);
  CHECK(exact_max_coverage(build_neighborhoods(line.dm, Epsilon(1.0)), 2)
            .q_star == 4);
  CHECK(verify_solution(line.dm, sol).ok());
}

TEST_CASE("sccrb with budget one among isolated points") {
  const auto line = make_line({0, 10, 20});
  const auto sol = run_sccrb(line.dataset, line.dm, 2, Epsilon(0.5), 1);
  CHECK(sol.total_exemplars() == 1);
  CHECK(sol.exemplars.front() == IndexList{0});
  CHECK(sol.uncovered == IndexList{1, 2});
  CHECK(verify_solution(line.dm, sol).ok());
}

TEST_CASE("sccrb with beta = n covers what scce covers") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const Index n = testing::uniform_int(rng, 2, 40);
    const auto ds = Dataset::from_vectors(testing::uniform_points(rng, n));
    const auto dm = compute_distances(ds, MetricKind::kEuclidean);
    const Index k = testing::uniform_int(rng, 1, std::min<Index>(n, 5));
    const auto scce = run_scce(ds, dm, k, Epsilon(0.2));
    const auto sccrb = run_sccrb(ds, dm, k, Epsilon(0.2), n);
    CHECK(sccrb.uncovered.empty());
    CHECK(sccrb.clusters == scce.clusters);
    CHECK(sccrb.exemplars == scce.exemplars);
  }
}

TEST_CASE("non-exemplars join their nearest covering exemplar") {
  // Instance 4 is within epsilon of both exemplars 0 and 3.
  const auto line = make_line({0, -1, 1.9, 4, 2.0, 5});
  const auto sol = run_scce(line.dataset, line.dm, 2, Epsilon(2.0));
  REQUIRE(verify_solution(line.dm, sol).ok());
  for (Index i = 0; i < line.dm.size(); ++i) {
    const Index e = sol.covered_by[static_cast<std::size_t>(i)];
    for (const auto& ex : sol.exemplars)
      for (Index other : ex)
        if (line.dm(i, other) <= 2.0) CHECK(line.dm(i, e) <= line.dm(i, other));
  }
}

TEST_CASE("empty clusters are retained") {
  // Exemplar 1 covers everything and sits in block 0; block 1 keeps nothing.
  const auto line = make_line({0, 1, 2});
  const auto sol = run_scce(line.dataset, line.dm, 2, Epsilon(1.0));
  CHECK(sol.clusters.size() == 2);
  CHECK(sol.exemplars == std::vector<IndexList>{{1}, {}});
  CHECK(sol.clusters == std::vector<IndexList>{{0, 1, 2}, {}});
  CHECK(verify_solution(line.dm, sol).ok());
}

TEST_CASE("pipeline parameter validation") {
  const auto line = make_line({0, 1, 2});
  CHECK_THROWS_AS(run_scce(line.dataset, line.dm, 0, Epsilon(1.0)), InputError);
  CHECK_THROWS_AS(run_scce(line.dataset, line.dm, 4, Epsilon(1.0)), InputError);
  CHECK_THROWS_AS(run_sccrb(line.dataset, line.dm, 2, Epsilon(1.0), 0),
                  InputError);
  CHECK_THROWS_AS(run_sccrb(line.dataset, line.dm, 2, Epsilon(1.0), 4),
                  InputError);
  const auto other = make_line({0, 1});
  CHECK_THROWS_AS(run_scce(other.dataset, line.dm, 1, Epsilon(1.0)),
                  InputError);
}

TEST_CASE("verify_solution flags injected faults") {
  const auto line = make_line({0, 1, 10, 11});
  const auto good = run_scce(line.dataset, line.dm, 2, Epsilon(1.0));

  SUBCASE("shared exemplar") {
    auto bad = good;
    bad.exemplars[1].push_back(0);
    bad.clusters[1].push_back(0);
    const auto r = verify_solution(line.dm, bad);
    CHECK_FALSE(r.find("exemplar_disjointness")->passed());
    CHECK_FALSE(r.find("partition")->passed());
  }
  SUBCASE("covering exemplar too far") {
    auto bad = good;
    bad.params.epsilon = 0.5;
    const auto r = verify_solution(line.dm, bad);
    CHECK_FALSE(r.find("coverage_within_epsilon")->passed());
    CHECK(r.find("exemplar_disjointness")->passed());
  }
  SUBCASE("covered_by points across clusters") {
    auto bad = good;
    bad.covered_by[1] = 2;
    CHECK_FALSE(verify_solution(line.dm, bad).find("coverage_within_epsilon")
                    ->passed());
  }
  SUBCASE("exemplar moved out of its block") {
    auto bad = good;
    bad.blocks.assignment[0] = 1;
    CHECK_FALSE(
        verify_solution(line.dm, bad).find("exemplars_not_moved")->passed());
  }
  SUBCASE("scce must be complete") {
    auto bad = good;
    bad.clusters[1] = {2};
    bad.uncovered = {3};
    bad.covered_by[3] = kUncovered;
    const auto r = verify_solution(line.dm, bad);
    CHECK_FALSE(r.find("complete")->passed());
    CHECK_FALSE(r.find("uncovered_exact")->passed());
  }
  SUBCASE("budget") {
    auto bad = good;
    bad.params.beta = 1;
    CHECK_FALSE(verify_solution(line.dm, bad).find("budget")->passed());
  }
  SUBCASE("wrong shape") {
    auto bad = good;
    bad.covered_by.pop_back();
    const auto r = verify_solution(line.dm, bad);
    CHECK_FALSE(r.ok());
    CHECK(r.checks.size() == 1);
  }
}

TEST_CASE("pipelines are deterministic across runs and thread counts") {
  std::mt19937_64 rng(17);
  const auto ds = Dataset::from_vectors(testing::uniform_points(rng, 300, 3));
  const auto dm = compute_distances(ds, MetricKind::kEuclidean);
  const auto a = run_scce(ds, dm, 4, Epsilon(0.2), {1, MetricKind::kEuclidean, 1});
  const auto b = run_scce(ds, dm, 4, Epsilon(0.2), {1, MetricKind::kEuclidean, 4});
  CHECK(a == b);
  const auto c = run_sccrb(ds, dm, 4, Epsilon(0.2), 7);
  const auto d = run_sccrb(ds, dm, 4, Epsilon(0.2), 7, {0, MetricKind::kEuclidean, 3});
  CHECK(c == d);
}

TEST_CASE("approximation bounds on random instances") {
  std::mt19937_64 rng(2024);
  const double one_minus_inv_e = 1.0 - 1.0 / std::exp(1.0);
  for (int trial = 0; trial < 80; ++trial) {
    const Index n = testing::uniform_int(rng, 4, 11);
    const Index k = testing::uniform_int(rng, 2, 3);
    const double eps = std::array{0.1, 0.3, 1.0}[trial % 3];
    const auto ds = Dataset::from_vectors(testing::uniform_points(rng, n));
    const auto dm = compute_distances(ds, MetricKind::kEuclidean);
    const auto oracle = solve_within_limits(dm, k, Epsilon(eps), 2);
    REQUIRE(oracle.diameter);

    const auto scce = run_scce(ds, dm, k, Epsilon(eps));
    CHECK(verify_solution(dm, scce).ok());
    CHECK(max_diameter(dm, scce) <= 2.0 * (oracle.diameter->d_star + eps));
    CHECK(static_cast<double>(scce.total_exemplars()) <=
          harmonic_number(n) * static_cast<double>(oracle.exemplars->n_star));

    const auto sccrb = run_sccrb(ds, dm, k, Epsilon(eps), 2);
    CHECK(verify_solution(dm, sccrb).ok());
    CHECK(max_diameter(dm, sccrb) <= 2.0 * (oracle.diameter->d_star + eps));
    CHECK(sccrb.total_exemplars() <= 2);
    CHECK(static_cast<double>(sccrb.covered_count()) >=
          one_minus_inv_e * static_cast<double>(oracle.coverage->q_star));
  }
}

}  // namespace
}  // namespace exclust
