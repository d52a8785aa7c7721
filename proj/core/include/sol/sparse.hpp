// Copyright 2026 The SOL Authors. All Rights Reserved.
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

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace sol {

struct SparseEntry {
  std::size_t index;
  double value;

  friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

/// Sparse feature vector with strictly increasing 0-based indices.
///
/// Explicit zeros are dropped on construction, so the stored support is
/// exactly the nonzero set. Non-finite values and unordered or duplicate
/// indices are rejected with DataError.
class SparseVector {
 public:
  SparseVector() = default;
  explicit SparseVector(std::vector<SparseEntry> entries);

  static SparseVector from_dense(std::span<const double> values);

  std::span<const SparseEntry> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // Smallest dense dimension covering every stored index (0 when empty).
  std::size_t required_dimension() const {
    return entries_.empty() ? 0 : entries_.back().index + 1;
  }

  double squared_norm() const;
  double l1_norm() const;

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  std::vector<SparseEntry> entries_;
};

/// Dense weight vector that grows on first touch of a new coordinate.
/// Reads past the logical dimension return 0.
class DenseWeights {
 public:
  DenseWeights() = default;
  explicit DenseWeights(std::size_t dimension) : values_(dimension, 0.0) {}
  explicit DenseWeights(std::vector<double> values)
      : values_(std::move(values)) {}

  std::size_t dimension() const { return values_.size(); }

  double operator[](std::size_t i) const {
    return i < values_.size() ? values_[i] : 0.0;
  }

  // Mutable access; grows the vector with zeros to cover i.
  double& at(std::size_t i) {
    if (i >= values_.size()) values_.resize(i + 1, 0.0);
    return values_[i];
  }

  void grow_to(std::size_t dimension) {
    if (dimension > values_.size()) values_.resize(dimension, 0.0);
  }

  std::span<const double> values() const { return values_; }
  std::span<double> values() { return values_; }

  std::size_t nonzeros() const;

  friend bool operator==(const DenseWeights&, const DenseWeights&) = default;

 private:
  std::vector<double> values_;
};

// sum of x_i * w_i over x's support.
double dot(const SparseVector& x, const DenseWeights& w);

// theta += alpha * x, growing theta as needed. alpha must be finite.
void scaled_add(DenseWeights& theta, const SparseVector& x, double alpha);

// sign(u) * max(|u| - lambda, 0) for one coordinate.
inline double soft_threshold(double u, double lambda) {
  if (u > lambda) return u - lambda;
  if (u < -lambda) return u + lambda;
  return 0.0;
}

// Coordinate-wise soft threshold: the minimizer of
// 0.5 * ||u - w||^2 + lambda * ||w||_1. Throws SpecError for lambda < 0.
DenseWeights soft_threshold(const DenseWeights& u, double lambda);

// Fraction of the ambient_dim coordinates where w is zero. Coordinates past
// w's logical dimension count as zero.
double model_sparsity(const DenseWeights& w, std::size_t ambient_dim);

}  // namespace sol
