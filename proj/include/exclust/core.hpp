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

// Instance sets, the metric distance model and epsilon-neighborhoods.

#ifndef EXCLUST_CORE_HPP_
#define EXCLUST_CORE_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "exclust/parallel.hpp"

namespace exclust {

using Index = Eigen::Index;
using IndexList = std::vector<Index>;

// Raised for malformed user input: bad parameters, ragged files, matrices
// that are not distance matrices. The CLI maps it to exit status 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class MetricKind { kEuclidean, kCosineAngular, kPrecomputed };

std::string_view to_string(MetricKind metric);
MetricKind parse_metric(std::string_view name);

// The instance set X. Rows of points() are instances when the payload is
// vector-valued; opaque datasets carry identity only and are paired with a
// precomputed distance matrix.
class Dataset {
 public:
  static Dataset from_vectors(Eigen::MatrixXd points,
                              std::vector<std::string> labels = {});
  static Dataset opaque(Index n, std::vector<std::string> labels = {});

  Index size() const { return n_; }
  bool has_vectors() const { return has_vectors_; }
  Index dimension() const { return has_vectors_ ? points_.cols() : 0; }
  const Eigen::MatrixXd& points() const { return points_; }
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  Dataset() = default;

  Index n_ = 0;
  bool has_vectors_ = false;
  Eigen::MatrixXd points_;
  std::vector<std::string> labels_;
};

class DistanceMatrix;

template <typename Derived>
DistanceMatrix compute_distances(const Eigen::MatrixBase<Derived>& points,
                                 MetricKind metric, int threads = 1);

// Symmetric n x n matrix of metric distances with a zero diagonal.
// Construction validates symmetry (exact), zero diagonal, finiteness and
// non-negativity; the triangle inequality is checked separately.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(Eigen::MatrixXd entries);

  Index size() const { return entries_.rows(); }
  double operator()(Index i, Index j) const { return entries_(i, j); }
  const Eigen::MatrixXd& entries() const { return entries_; }
  double max_entry() const;

 private:
  struct Trusted {};
  DistanceMatrix(Eigen::MatrixXd entries, Trusted)
      : entries_(std::move(entries)) {}

  template <typename Derived>
  friend DistanceMatrix compute_distances(const Eigen::MatrixBase<Derived>&,
                                          MetricKind, int);

  Eigen::MatrixXd entries_;
};

// Coverage radius; strictly positive and finite.
class Epsilon {
 public:
  explicit Epsilon(double value);
  double value() const { return value_; }

 private:
  double value_;
};

// S_i = { j : d(i, j) <= epsilon }, each list sorted ascending.
class NeighborhoodSets {
 public:
  explicit NeighborhoodSets(std::vector<IndexList> sets)
      : sets_(std::move(sets)) {}

  Index size() const { return static_cast<Index>(sets_.size()); }
  const IndexList& operator[](Index i) const {
    return sets_[static_cast<std::size_t>(i)];
  }
  const std::vector<IndexList>& sets() const { return sets_; }
  Index total_size() const;

 private:
  std::vector<IndexList> sets_;
};

namespace internal {

inline double angular_distance(double dot, double norm_a, double norm_b) {
  const double cosine = std::clamp(dot / (norm_a * norm_b), -1.0, 1.0);
  return std::acos(cosine);
}

// Copies the strict lower triangle onto the upper one, tile by tile.
void mirror_lower(Eigen::MatrixXd& d);

}  // namespace internal

// Pairwise distances between the rows of `points`. Each unordered pair is
// evaluated once and mirrored, so the result is bit-symmetric and identical
// for any thread count.
template <typename Derived>
DistanceMatrix compute_distances(const Eigen::MatrixBase<Derived>& points,
                                 MetricKind metric, int threads) {
  const Index n = points.rows();
  if (n < 1) throw InputError("dataset must contain at least one instance");
  if (points.cols() < 1) throw InputError("vectors must have dimension >= 1");
  if (!points.allFinite()) throw InputError("vectors contain non-finite values");

  // One point per column so each point is contiguous.
  const Eigen::MatrixXd x = points.transpose().template cast<double>();
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);

  switch (metric) {
    case MetricKind::kEuclidean:
      parallel_for(n, threads, [&](Index i) {
        for (Index j = i + 1; j < n; ++j) {
          d(j, i) = (x.col(i) - x.col(j)).norm();
        }
      });
      break;
    case MetricKind::kCosineAngular: {
      const Eigen::VectorXd norms = x.colwise().norm().transpose();
      for (Index i = 0; i < n; ++i) {
        if (norms(i) == 0.0) {
          throw InputError("zero-norm vector at row " + std::to_string(i) +
                           " under cosine-angular metric");
        }
      }
      parallel_for(n, threads, [&](Index i) {
        for (Index j = i + 1; j < n; ++j) {
          d(j, i) = internal::angular_distance(x.col(i).dot(x.col(j)),
                                               norms(i), norms(j));
        }
      });
      break;
    }
    case MetricKind::kPrecomputed:
      throw InputError(
          "metric 'precomputed' needs a distance matrix, not vectors");
  }
  internal::mirror_lower(d);
  return DistanceMatrix(std::move(d), DistanceMatrix::Trusted{});
}

DistanceMatrix compute_distances(const Dataset& dataset, MetricKind metric,
                                 int threads = 1);

// Validates a user-supplied matrix for use with an opaque dataset.
DistanceMatrix compute_distances(const Dataset& dataset,
                                 const Eigen::MatrixXd& precomputed);

NeighborhoodSets build_neighborhoods(const DistanceMatrix& dm, Epsilon eps,
                                     int threads = 1);

struct TriangleCheck {
  std::int64_t triples_checked = 0;
  double tolerance = 0.0;
  // First offending (i, j, l) with d(i,l) > d(i,j) + d(j,l) + tolerance.
  std::optional<std::array<Index, 3>> violation;
  double excess = 0.0;

  bool ok() const { return !violation.has_value(); }
};

// Exhaustive when n^3 <= max_triples, otherwise max_triples triples drawn
// from a generator seeded with `seed`. Tolerance is 1e-9 * max entry.
TriangleCheck check_triangle_inequality(const DistanceMatrix& dm,
                                        std::int64_t max_triples = 100000,
                                        std::uint64_t seed = 0);

}  // namespace exclust

#endif  // EXCLUST_CORE_HPP_
