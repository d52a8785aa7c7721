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
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sol/model.hpp"
#include "sol/sparse.hpp"

namespace sol {

struct SparseExample {
  Label y = Label::kPositive;
  SparseVector x;

  friend bool operator==(const SparseExample&, const SparseExample&) = default;
};

using Dataset = std::vector<SparseExample>;

struct DatasetMeta {
  std::size_t n_examples = 0;
  // Max 0-based feature index + 1, i.e. the largest 1-based index in a file.
  std::size_t ambient_dim = 0;
  std::size_t nnz = 0;
  std::size_t positives = 0;
  std::size_t negatives = 0;

  friend bool operator==(const DatasetMeta&, const DatasetMeta&) = default;
};

/// Parses one LIBSVM line: "<label> <index>:<value> ...", 1-based indices,
/// text after '#' ignored. Labels -1, 0 and +1 are accepted; 0 maps to -1.
/// Returns nullopt for blank and comment-only lines. Throws ParseError.
std::optional<SparseExample> parse_libsvm_line(std::string_view line,
                                               std::size_t line_number = 0);

// Canonical form: "+1"/"-1" label and %.17g values, so parsing it back
// reproduces the example exactly.
std::string serialize_libsvm_line(const SparseExample& example);

/// Streaming reader over a LIBSVM file.
class LibsvmReader {
 public:
  explicit LibsvmReader(const std::filesystem::path& path);

  // Next example, or nullopt at end of file.
  std::optional<SparseExample> next();
  std::size_t line_number() const { return line_number_; }

 private:
  std::ifstream in_;
  std::string line_;
  std::size_t line_number_ = 0;
};

Dataset read_libsvm(const std::filesystem::path& path);
void write_libsvm(const std::filesystem::path& path, const Dataset& data);

// Single streaming pass over a file.
DatasetMeta scan_meta(const std::filesystem::path& path);
DatasetMeta compute_meta(const Dataset& data);

// Parses on a producer thread and hands examples to consume() on the calling
// thread, in file order, through a queue holding at most capacity items.
void stream_libsvm(const std::filesystem::path& path, std::size_t capacity,
                   const std::function<void(SparseExample&&)>& consume);

struct StreamOptions {
  // Datasets estimated above this many bytes are streamed in file order.
  std::size_t memory_budget_bytes = std::size_t{4} << 30;
};

std::size_t estimated_bytes(const Dataset& data);

// Fisher-Yates visiting order for data, deterministic in seed. Falls back to
// sequential order (with a warning on stderr) when the dataset exceeds the
// memory budget.
std::vector<std::size_t> permuted_stream(const Dataset& data, std::uint64_t seed,
                                         const StreamOptions& options = {});

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

struct SyntheticSpec {
  std::size_t n_train = 100000;
  std::size_t n_test = 10000;
  std::size_t ambient_dim = 1000;
  std::size_t n_effective = 100;
  std::size_t n_noise = 200;
  Interval mean_range{-1.0, 1.0};
  Interval var_range{0.5, 100.0};
  double noise_var = 100.0;
  std::uint64_t seed = 1;

  void validate() const;
  // ambient_dim - n_effective over ambient_dim: the sparsity of the true plane.
  double planted_sparsity() const;
};

struct SyntheticData {
  Dataset train;
  Dataset test;
  DenseWeights true_plane;
};

/// Effective block ~ N(p, diag(sigma^2)) with p_i ~ U(mean_range) and
/// sigma_i^2 ~ U(var_range); label sign(p . x) with sign(0) = +1; then
/// n_noise distinct indices from [n_effective, ambient_dim) per example get
/// N(0, noise_var) values. The same procedure produces train and test.
SyntheticData generate_synthetic(const SyntheticSpec& spec);

// Seeded sample without replacement of n_pos positives and n_neg negatives,
// returned in seeded shuffled order. Throws DataError naming a short class.
Dataset subsample_imbalanced(const Dataset& data, std::size_t n_pos,
                             std::size_t n_neg, std::uint64_t seed);

}  // namespace sol
