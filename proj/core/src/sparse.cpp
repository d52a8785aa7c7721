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

#include "sol/sparse.hpp"

#include <cmath>
#include <string>

#include "sol/error.hpp"

namespace sol {

SparseVector::SparseVector(std::vector<SparseEntry> entries) {
  entries_.reserve(entries.size());
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const SparseEntry& e = entries[k];
    if (!std::isfinite(e.value)) {
      throw DataError("non-finite value at index " + std::to_string(e.index));
    }
    if (k > 0 && e.index <= entries[k - 1].index) {
      throw DataError("indices must be strictly increasing (index " +
                      std::to_string(e.index) + " after " +
                      std::to_string(entries[k - 1].index) + ")");
    }
    if (e.value != 0.0) entries_.push_back(e);
  }
}

SparseVector SparseVector::from_dense(std::span<const double> values) {
  std::vector<SparseEntry> entries;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] != 0.0) entries.push_back({i, values[i]});
  }
  return SparseVector(std::move(entries));
}

double SparseVector::squared_norm() const {
  double s = 0.0;
  for (const auto& e : entries_) s += e.value * e.value;
  return s;
}

double SparseVector::l1_norm() const {
  double s = 0.0;
  for (const auto& e : entries_) s += std::abs(e.value);
  return s;
}

std::size_t DenseWeights::nonzeros() const {
  std::size_t n = 0;
  for (double v : values_) n += (v != 0.0);
  return n;
}

double dot(const SparseVector& x, const DenseWeights& w) {
  double s = 0.0;
  for (const auto& e : x) s += e.value * w[e.index];
  return s;
}

void scaled_add(DenseWeights& theta, const SparseVector& x, double alpha) {
  if (!std::isfinite(alpha)) throw NumericError("scaled_add: non-finite scale");
  if (alpha == 0.0) return;
  theta.grow_to(x.required_dimension());
  auto values = theta.values();
  for (const auto& e : x) values[e.index] += alpha * e.value;
}

DenseWeights soft_threshold(const DenseWeights& u, double lambda) {
  if (!(lambda >= 0.0)) throw SpecError("soft_threshold: lambda must be >= 0");
  std::vector<double> out(u.dimension());
  const auto in = u.values();
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = soft_threshold(in[i], lambda);
  }
  return DenseWeights(std::move(out));
}

double model_sparsity(const DenseWeights& w, std::size_t ambient_dim) {
  if (ambient_dim == 0) throw SpecError("model_sparsity: ambient_dim is 0");
  const auto values = w.values();
  for (std::size_t i = ambient_dim; i < values.size(); ++i) {
    if (values[i] != 0.0) {
      throw SpecError("model_sparsity: weight " + std::to_string(i) +
                      " lies outside the ambient dimension");
    }
  }
  const std::size_t nnz = w.nonzeros();
  return static_cast<double>(ambient_dim - nnz) /
         static_cast<double>(ambient_dim);
}

}  // namespace sol
