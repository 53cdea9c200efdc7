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

#include <numbers>
#include <random>

#include "doctest.h"

#include "exclust/core.hpp"
#include "test_util.hpp"

namespace exclust {
namespace {

using testing::line_distances;
using testing::line_points;

TEST_CASE("euclidean distances on a 3-4-5 triangle") {
  Eigen::MatrixXd p(2, 2);
  p << 0, 0, 3, 4;
  const auto dm = compute_distances(p, MetricKind::kEuclidean);
  CHECK(dm.size() == 2);
  CHECK(dm(0, 0) == 0.0);
  CHECK(dm(0, 1) == 5.0);
  CHECK(dm(1, 0) == 5.0);
}

TEST_CASE("single point gives a zero matrix for every vector metric") {
  Eigen::MatrixXd p(1, 1);
  p << 7.0;
  CHECK(compute_distances(p, MetricKind::kEuclidean)(0, 0) == 0.0);
  CHECK(compute_distances(p, MetricKind::kCosineAngular)(0, 0) == 0.0);
}

TEST_CASE("cosine-angular distance is the angle between vectors") {
  Eigen::MatrixXd p(3, 2);
  p << 1, 0, 0, 1, -1, 0;
  const auto dm = compute_distances(p, MetricKind::kCosineAngular);
  CHECK(dm(0, 1) == doctest::Approx(std::numbers::pi / 2).epsilon(1e-15));
  CHECK(dm(0, 2) == doctest::Approx(std::numbers::pi).epsilon(1e-15));
  CHECK(dm(1, 2) == doctest::Approx(std::numbers::pi / 2).epsilon(1e-15));
  // Scale invariance.
  Eigen::MatrixXd q = p;
  q.row(1) *= 40.0;
  CHECK(compute_distances(q, MetricKind::kCosineAngular)(0, 1) ==
        doctest::Approx(std::numbers::pi / 2).epsilon(1e-15));
}

TEST_CASE("compute_distances rejects bad inputs") {
  Eigen::MatrixXd zero(2, 2);
  zero << 0, 0, 1, 1;
  CHECK_THROWS_AS(compute_distances(zero, MetricKind::kCosineAngular),
                  InputError);
  CHECK_THROWS_AS(compute_distances(zero, MetricKind::kPrecomputed),
                  InputError);
  const Dataset opaque = Dataset::opaque(2);
  CHECK_THROWS_AS(compute_distances(opaque, MetricKind::kEuclidean),
                  InputError);
  Eigen::MatrixXd wrong(3, 3);
  wrong.setZero();
  CHECK_THROWS_AS(compute_distances(opaque, wrong), InputError);
}

TEST_CASE("DistanceMatrix validation names the offending entry") {
  Eigen::MatrixXd asym(2, 2);
  asym << 0, 5, 4, 0;
  try {
    DistanceMatrix dm(asym);
    FAIL("expected an error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("(1,0)") != std::string::npos);
  }
  Eigen::MatrixXd neg(2, 2);
  neg << 0, -1, -1, 0;
  CHECK_THROWS_AS(DistanceMatrix{neg}, InputError);
  Eigen::MatrixXd diag(2, 2);
  diag << 1, 2, 2, 0;
  CHECK_THROWS_AS(DistanceMatrix{diag}, InputError);
  Eigen::MatrixXd rect(2, 3);
  rect.setZero();
  CHECK_THROWS_AS(DistanceMatrix{rect}, InputError);
}

TEST_CASE("epsilon must be positive and finite") {
  CHECK_THROWS_AS(Epsilon(0.0), InputError);
  CHECK_THROWS_AS(Epsilon(-1.0), InputError);
  CHECK_THROWS_AS(Epsilon(std::numeric_limits<double>::infinity()),
                  InputError);
  CHECK_THROWS_AS(Epsilon(std::numeric_limits<double>::quiet_NaN()),
                  InputError);
  CHECK(Epsilon(0.25).value() == 0.25);
}

TEST_CASE("neighborhood boundary is inclusive") {
  const auto dm = line_distances({0, 5});
  const auto at = build_neighborhoods(dm, Epsilon(5.0));
  CHECK(at[0] == IndexList{0, 1});
  CHECK(at[1] == IndexList{0, 1});
  const auto below = build_neighborhoods(dm, Epsilon(4.999));
  CHECK(below[0] == IndexList{0});
  CHECK(below[1] == IndexList{1});
}

TEST_CASE("neighborhoods on a small line") {
  const auto neigh = build_neighborhoods(line_distances({0, 1, 2, 10}),
                                         Epsilon(1.5));
  CHECK(neigh[0] == IndexList{0, 1});
  CHECK(neigh[1] == IndexList{0, 1, 2});
  CHECK(neigh[2] == IndexList{1, 2});
  CHECK(neigh[3] == IndexList{3});
  CHECK(neigh.total_size() == 8);
}

TEST_CASE("neighborhood invariants on random data") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Index n = testing::uniform_int(rng, 1, 30);
    const auto dm =
        compute_distances(testing::uniform_points(rng, n, 3),
                          MetricKind::kEuclidean);
    const double eps = std::uniform_real_distribution<double>(0.01, 1.0)(rng);
    const auto neigh = build_neighborhoods(dm, Epsilon(eps));
    for (Index i = 0; i < n; ++i) {
      CHECK(std::binary_search(neigh[i].begin(), neigh[i].end(), i));
      CHECK(std::is_sorted(neigh[i].begin(), neigh[i].end()));
      for (Index j = 0; j < n; ++j) {
        const bool ij = std::binary_search(neigh[i].begin(), neigh[i].end(), j);
        const bool ji = std::binary_search(neigh[j].begin(), neigh[j].end(), i);
        CHECK(ij == ji);
        CHECK(ij == (dm(i, j) <= eps));
      }
    }
  }
}

TEST_CASE("distances and neighborhoods do not depend on thread count") {
  std::mt19937_64 rng(3);
  const auto points = testing::uniform_points(rng, 257, 4);
  for (auto metric : {MetricKind::kEuclidean, MetricKind::kCosineAngular}) {
    const auto one = compute_distances(points, metric, 1);
    const auto four = compute_distances(points, metric, 4);
    CHECK(one.entries() == four.entries());
    CHECK(build_neighborhoods(one, Epsilon(0.3), 1).sets() ==
          build_neighborhoods(one, Epsilon(0.3), 3).sets());
  }
}

TEST_CASE("computed metrics pass the triangle spot check") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const Index n = testing::uniform_int(rng, 2, 60);
    const auto points = testing::uniform_points(rng, n, 5);
    CHECK(check_triangle_inequality(
              compute_distances(points, MetricKind::kEuclidean))
              .ok());
    CHECK(check_triangle_inequality(
              compute_distances(points, MetricKind::kCosineAngular))
              .ok());
  }
}

TEST_CASE("triangle check finds a planted violation") {
  Eigen::MatrixXd m(3, 3);
  m << 0, 1, 5, 1, 0, 1, 5, 1, 0;
  const auto tri = check_triangle_inequality(DistanceMatrix(m));
  CHECK_FALSE(tri.ok());
  CHECK(tri.triples_checked == 27);
  CHECK(tri.excess == doctest::Approx(3.0));

  // Sampled mode on a larger matrix still checks exactly max_triples.
  std::mt19937_64 rng(1);
  const auto dm = compute_distances(testing::uniform_points(rng, 50),
                                    MetricKind::kEuclidean);
  const auto sampled = check_triangle_inequality(dm, 1000);
  CHECK(sampled.ok());
  CHECK(sampled.triples_checked == 1000);
}

TEST_CASE("metric names round trip") {
  for (auto m : {MetricKind::kEuclidean, MetricKind::kCosineAngular,
                 MetricKind::kPrecomputed}) {
    CHECK(parse_metric(to_string(m)) == m);
  }
  CHECK_THROWS_AS(parse_metric("manhattan"), InputError);
}

TEST_CASE("dataset construction") {
  const auto ds = Dataset::from_vectors(line_points({1, 2, 3}), {"a", "b", "c"});
  CHECK(ds.size() == 3);
  CHECK(ds.dimension() == 1);
  CHECK(ds.has_vectors());
  CHECK_THROWS_AS(Dataset::from_vectors(line_points({1, 2}), {"a"}),
                  InputError);
  CHECK_THROWS_AS(Dataset::opaque(0), InputError);
  CHECK(Dataset::opaque(4).dimension() == 0);
}

}  // namespace
}  // namespace exclust
