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

#include "sol/data_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <exception>
#include <iostream>
#include <numeric>
#include <thread>

#include "sol/bounded_queue.hpp"
#include "sol/error.hpp"
#include "sol/random.hpp"

namespace sol {
namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

std::optional<double> parse_double(std::string_view s) {
  if (!s.empty() && s.front() == '+') {
    s.remove_prefix(1);
    if (!s.empty() && s.front() == '-') return std::nullopt;
  }
  if (s.empty()) return std::nullopt;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::optional<std::size_t> parse_index(std::string_view s) {
  if (s.empty()) return std::nullopt;
  unsigned long long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return static_cast<std::size_t>(v);
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::optional<SparseExample> parse_libsvm_line(std::string_view line,
                                               std::size_t line_number) {
  if (const auto hash = line.find('#'); hash != std::string_view::npos) {
    line = line.substr(0, hash);
  }
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && is_space(line[pos])) ++pos;
    const std::size_t start = pos;
    while (pos < line.size() && !is_space(line[pos])) ++pos;
    if (pos > start) tokens.push_back(line.substr(start, pos - start));
  }
  if (tokens.empty()) return std::nullopt;

  const auto label = parse_double(tokens.front());
  if (!label) {
    throw ParseError("non-numeric label '" + std::string(tokens.front()) + "'",
                     line_number);
  }
  SparseExample ex;
  if (*label == 1.0) {
    ex.y = Label::kPositive;
  } else if (*label == -1.0 || *label == 0.0) {
    ex.y = Label::kNegative;
  } else {
    throw ParseError("label must be -1, 0 or +1, got '" +
                         std::string(tokens.front()) + "'",
                     line_number);
  }

  std::vector<SparseEntry> entries;
  entries.reserve(tokens.size() - 1);
  std::optional<std::size_t> previous;
  for (std::size_t k = 1; k < tokens.size(); ++k) {
    const std::string_view tok = tokens[k];
    const auto colon = tok.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError("malformed feature '" + std::string(tok) + "'", line_number);
    }
    const auto index = parse_index(tok.substr(0, colon));
    const auto value = parse_double(tok.substr(colon + 1));
    if (!index || !value) {
      throw ParseError("malformed feature '" + std::string(tok) + "'", line_number);
    }
    if (*index < 1) {
      throw ParseError("feature index must be >= 1 in '" + std::string(tok) + "'",
                       line_number);
    }
    if (previous && *index <= *previous) {
      throw ParseError("feature indices must be strictly increasing ('" +
                           std::string(tok) + "' after index " +
                           std::to_string(*previous) + ")",
                       line_number);
    }
    if (!std::isfinite(*value)) {
      throw ParseError("non-finite value in '" + std::string(tok) + "'", line_number);
    }
    previous = index;
    if (*value != 0.0) entries.push_back({*index - 1, *value});
  }
  ex.x = SparseVector(std::move(entries));
  return ex;
}

std::string serialize_libsvm_line(const SparseExample& example) {
  std::string out = example.y == Label::kPositive ? "+1" : "-1";
  for (const auto& e : example.x) {
    out += ' ';
    out += std::to_string(e.index + 1);
    out += ':';
    out += format_double(e.value);
  }
  return out;
}

LibsvmReader::LibsvmReader(const std::filesystem::path& path) : in_(path) {
  if (!in_) throw DataError("cannot open " + path.string());
}

std::optional<SparseExample> LibsvmReader::next() {
  while (std::getline(in_, line_)) {
    ++line_number_;
    if (auto ex = parse_libsvm_line(line_, line_number_)) return ex;
  }
  if (in_.bad()) throw DataError("read error at line " + std::to_string(line_number_));
  return std::nullopt;
}

Dataset read_libsvm(const std::filesystem::path& path) {
  LibsvmReader reader(path);
  Dataset data;
  while (auto ex = reader.next()) data.push_back(std::move(*ex));
  return data;
}

void write_libsvm(const std::filesystem::path& path, const Dataset& data) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write " + path.string());
  for (const auto& ex : data) out << serialize_libsvm_line(ex) << '\n';
  if (!out) throw DataError("write failed for " + path.string());
}

namespace {

void accumulate(DatasetMeta& meta, const SparseExample& ex) {
  ++meta.n_examples;
  meta.nnz += ex.x.size();
  meta.ambient_dim = std::max(meta.ambient_dim, ex.x.required_dimension());
  if (ex.y == Label::kPositive) {
    ++meta.positives;
  } else {
    ++meta.negatives;
  }
}

}  // namespace

DatasetMeta scan_meta(const std::filesystem::path& path) {
  LibsvmReader reader(path);
  DatasetMeta meta;
  while (auto ex = reader.next()) accumulate(meta, *ex);
  return meta;
}

DatasetMeta compute_meta(const Dataset& data) {
  DatasetMeta meta;
  for (const auto& ex : data) accumulate(meta, ex);
  return meta;
}

void stream_libsvm(const std::filesystem::path& path, std::size_t capacity,
                   const std::function<void(SparseExample&&)>& consume) {
  LibsvmReader reader(path);
  BoundedQueue<SparseExample> queue(capacity);
  std::exception_ptr producer_error;
  std::thread producer([&] {
    try {
      while (auto ex = reader.next()) {
        if (!queue.push(std::move(*ex))) break;
      }
    } catch (...) {
      producer_error = std::current_exception();
    }
    queue.close();
  });
  try {
    while (auto ex = queue.pop()) consume(std::move(*ex));
  } catch (...) {
    queue.close();
    producer.join();
    throw;
  }
  producer.join();
  if (producer_error) std::rethrow_exception(producer_error);
}

std::size_t estimated_bytes(const Dataset& data) {
  std::size_t bytes = data.size() * sizeof(SparseExample);
  for (const auto& ex : data) bytes += ex.x.size() * sizeof(SparseEntry);
  return bytes;
}

std::vector<std::size_t> permuted_stream(const Dataset& data, std::uint64_t seed,
                                         const StreamOptions& options) {
  if (estimated_bytes(data) > options.memory_budget_bytes) {
    std::cerr << "warning: dataset exceeds the memory budget; "
                 "using file order instead of a permutation\n";
    std::vector<std::size_t> order(data.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    return order;
  }
  return permutation(data.size(), seed);
}

void SyntheticSpec::validate() const {
  if (ambient_dim == 0) throw SpecError("synthetic: ambient_dim must be positive");
  if (n_effective + n_noise > ambient_dim) {
    throw SpecError("synthetic: n_effective + n_noise exceeds ambient_dim");
  }
  if (!(mean_range.lo <= mean_range.hi) || !std::isfinite(mean_range.lo) ||
      !std::isfinite(mean_range.hi)) {
    throw SpecError("synthetic: invalid mean_range");
  }
  if (!(var_range.lo >= 0.0 && var_range.lo <= var_range.hi) ||
      !std::isfinite(var_range.hi)) {
    throw SpecError("synthetic: invalid var_range");
  }
  if (!(noise_var >= 0.0) || !std::isfinite(noise_var)) {
    throw SpecError("synthetic: noise_var must be non-negative");
  }
}

double SyntheticSpec::planted_sparsity() const {
  return static_cast<double>(ambient_dim - n_effective) /
         static_cast<double>(ambient_dim);
}

namespace {

Dataset draw_examples(Rng& rng, const SyntheticSpec& spec, std::size_t n,
                      const std::vector<double>& mean,
                      const std::vector<double>& stddev,
                      std::vector<std::size_t>& noise_pool) {
  Dataset out;
  out.reserve(n);
  const double noise_sd = std::sqrt(spec.noise_var);
  std::vector<SparseEntry> entries;
  std::vector<std::size_t> chosen;
  for (std::size_t k = 0; k < n; ++k) {
    entries.clear();
    double score = 0.0;
    for (std::size_t i = 0; i < spec.n_effective; ++i) {
      const double v = rng.normal(mean[i], stddev[i]);
      score += mean[i] * v;
      entries.push_back({i, v});
    }
    // Partial Fisher-Yates over the pool picks n_noise distinct indices.
    chosen.clear();
    for (std::size_t j = 0; j < spec.n_noise; ++j) {
      const auto pick = j + static_cast<std::size_t>(rng.below(noise_pool.size() - j));
      std::swap(noise_pool[j], noise_pool[pick]);
      chosen.push_back(noise_pool[j]);
    }
    std::sort(chosen.begin(), chosen.end());
    for (std::size_t idx : chosen) entries.push_back({idx, rng.normal(0.0, noise_sd)});
    out.push_back({sign_label(score), SparseVector(entries)});
  }
  return out;
}

}  // namespace

SyntheticData generate_synthetic(const SyntheticSpec& spec) {
  spec.validate();
  Rng rng(spec.seed);
  std::vector<double> mean(spec.n_effective);
  std::vector<double> stddev(spec.n_effective);
  for (auto& m : mean) m = rng.uniform(spec.mean_range.lo, spec.mean_range.hi);
  for (auto& s : stddev) s = std::sqrt(rng.uniform(spec.var_range.lo, spec.var_range.hi));

  std::vector<std::size_t> noise_pool(spec.ambient_dim - spec.n_effective);
  std::iota(noise_pool.begin(), noise_pool.end(), spec.n_effective);

  SyntheticData data;
  data.train = draw_examples(rng, spec, spec.n_train, mean, stddev, noise_pool);
  data.test = draw_examples(rng, spec, spec.n_test, mean, stddev, noise_pool);
  std::vector<double> plane(spec.ambient_dim, 0.0);
  std::copy(mean.begin(), mean.end(), plane.begin());
  data.true_plane = DenseWeights(std::move(plane));
  return data;
}

Dataset subsample_imbalanced(const Dataset& data, std::size_t n_pos,
                             std::size_t n_neg, std::uint64_t seed) {
  std::vector<std::size_t> pos;
  std::vector<std::size_t> neg;
  for (std::size_t i = 0; i < data.size(); ++i) {
    (data[i].y == Label::kPositive ? pos : neg).push_back(i);
  }
  if (pos.size() < n_pos) {
    throw DataError("subsample: need " + std::to_string(n_pos) +
                    " positive examples, found " + std::to_string(pos.size()));
  }
  if (neg.size() < n_neg) {
    throw DataError("subsample: need " + std::to_string(n_neg) +
                    " negative examples, found " + std::to_string(neg.size()));
  }
  Rng rng(seed);
  rng.shuffle(std::span<std::size_t>(pos));
  rng.shuffle(std::span<std::size_t>(neg));
  std::vector<std::size_t> picked(pos.begin(), pos.begin() + static_cast<std::ptrdiff_t>(n_pos));
  picked.insert(picked.end(), neg.begin(), neg.begin() + static_cast<std::ptrdiff_t>(n_neg));
  rng.shuffle(std::span<std::size_t>(picked));
  Dataset out;
  out.reserve(picked.size());
  for (std::size_t i : picked) out.push_back(data[i]);
  return out;
}

}  // namespace sol
