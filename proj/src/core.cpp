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

#include "exclust/core.hpp"

#include <random>

namespace exclust {

std::string_view to_string(MetricKind metric) {
  switch (metric) {
    case MetricKind::kEuclidean:
      return "euclidean";
    case MetricKind::kCosineAngular:
      return "cosine-angular";
    case MetricKind::kPrecomputed:
      return "precomputed";
  }
  return "unknown";
}

MetricKind parse_metric(std::string_view name) {
  if (name == "euclidean") return MetricKind::kEuclidean;
  if (name == "cosine-angular") return MetricKind::kCosineAngular;
  if (name == "precomputed") return MetricKind::kPrecomputed;
  throw InputError("unknown metric '" + std::string(name) + "'");
}

Dataset Dataset::from_vectors(Eigen::MatrixXd points,
                              std::vector<std::string> labels) {
  if (points.rows() < 1) {
    throw InputError("dataset must contain at least one instance");
  }
  if (points.cols() < 1) throw InputError("vectors must have dimension >= 1");
  if (!labels.empty() && static_cast<Index>(labels.size()) != points.rows()) {
    throw InputError("label count does not match instance count");
  }
  Dataset ds;
  ds.n_ = points.rows();
  ds.has_vectors_ = true;
  ds.points_ = std::move(points);
  ds.labels_ = std::move(labels);
  return ds;
}

Dataset Dataset::opaque(Index n, std::vector<std::string> labels) {
  if (n < 1) throw InputError("dataset must contain at least one instance");
  if (!labels.empty() && static_cast<Index>(labels.size()) != n) {
    throw InputError("label count does not match instance count");
  }
  Dataset ds;
  ds.n_ = n;
  ds.labels_ = std::move(labels);
  return ds;
}

namespace {

std::string entry_name(Index i, Index j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

DistanceMatrix::DistanceMatrix(Eigen::MatrixXd entries)
    : entries_(std::move(entries)) {
  const Index n = entries_.rows();
  if (n < 1) throw InputError("distance matrix must be at least 1x1");
  if (entries_.cols() != n) {
    throw InputError("distance matrix is not square: " + std::to_string(n) +
                     "x" + std::to_string(entries_.cols()));
  }
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      const double v = entries_(i, j);
      if (!std::isfinite(v)) {
        throw InputError("non-finite distance at entry " + entry_name(i, j));
      }
      if (v < 0.0) {
        throw InputError("negative distance at entry " + entry_name(i, j));
      }
    }
    if (entries_(i, i) != 0.0) {
      throw InputError("non-zero diagonal at entry " + entry_name(i, i));
    }
    for (Index j = 0; j < i; ++j) {
      if (entries_(i, j) != entries_(j, i)) {
        throw InputError("asymmetric distance at entry " + entry_name(i, j) +
                         ": " + std::to_string(entries_(i, j)) +
                         " != " + std::to_string(entries_(j, i)));
      }
    }
  }
}

double DistanceMatrix::max_entry() const { return entries_.maxCoeff(); }

Epsilon::Epsilon(double value) : value_(value) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw InputError("epsilon must be a finite value > 0");
  }
}

Index NeighborhoodSets::total_size() const {
  Index total = 0;
  for (const auto& s : sets_) total += static_cast<Index>(s.size());
  return total;
}

DistanceMatrix compute_distances(const Dataset& dataset, MetricKind metric,
                                 int threads) {
  if (!dataset.has_vectors()) {
    throw InputError("metric '" + std::string(to_string(metric)) +
                     "' requires vector instances");
  }
  return compute_distances(dataset.points(), metric, threads);
}

DistanceMatrix compute_distances(const Dataset& dataset,
                                 const Eigen::MatrixXd& precomputed) {
  if (precomputed.rows() != dataset.size()) {
    throw InputError("distance matrix has " +
                     std::to_string(precomputed.rows()) + " rows but dataset has " +
                     std::to_string(dataset.size()) + " instances");
  }
  return DistanceMatrix(precomputed);
}

namespace internal {

void mirror_lower(Eigen::MatrixXd& d) {
  constexpr Index kTile = 64;
  const Index n = d.rows();
  for (Index jb = 0; jb < n; jb += kTile) {
    const Index j_end = std::min(n, jb + kTile);
    for (Index ib = 0; ib <= jb; ib += kTile) {
      const Index i_end = std::min(n, ib + kTile);
      for (Index j = jb; j < j_end; ++j) {
        for (Index i = ib; i < std::min(i_end, j); ++i) d(i, j) = d(j, i);
      }
    }
  }
}

}  // namespace internal

NeighborhoodSets build_neighborhoods(const DistanceMatrix& dm, Epsilon eps,
                                     int threads) {
  const Index n = dm.size();
  const double radius = eps.value();
  const Eigen::MatrixXd& d = dm.entries();
  std::vector<IndexList> sets(static_cast<std::size_t>(n));
  // Columns are contiguous; column i equals row i by symmetry.
  parallel_for(n, threads, [&](Index i) {
    IndexList& s = sets[static_cast<std::size_t>(i)];
    const double* col = d.col(i).data();
    for (Index j = 0; j < n; ++j) {
      if (col[j] <= radius) s.push_back(j);
    }
  });
  return NeighborhoodSets(std::move(sets));
}

TriangleCheck check_triangle_inequality(const DistanceMatrix& dm,
                                        std::int64_t max_triples,
                                        std::uint64_t seed) {
  TriangleCheck result;
  const Index n = dm.size();
  result.tolerance = 1e-9 * dm.max_entry();

  auto test = [&](Index i, Index j, Index l) {
    ++result.triples_checked;
    const double excess = dm(i, l) - (dm(i, j) + dm(j, l));
    if (excess > result.tolerance && !result.violation) {
      result.violation = std::array<Index, 3>{i, j, l};
      result.excess = excess;
    }
  };

  const double cube = static_cast<double>(n) * n * n;
  if (cube <= static_cast<double>(max_triples)) {
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        for (Index l = 0; l < n; ++l) test(i, j, l);
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Index> pick(0, n - 1);
    for (std::int64_t t = 0; t < max_triples; ++t) {
      const Index i = pick(rng);
      const Index j = pick(rng);
      const Index l = pick(rng);
      test(i, j, l);
    }
  }
  return result;
}

}  // namespace exclust
