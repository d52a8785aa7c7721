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

// Helpers shared by the unit tests and the acceptance runner. The oracles
// here are deliberately naive and independent of the library code paths
// they check.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "sol/data_io.hpp"
#include "sol/model.hpp"
#include "sol/sparse.hpp"

namespace sol::testing {

// Minimizes 0.5 (u - w)^2 + lambda |w| by bisection on the subdifferential
// w - u + lambda * d|w|, which is monotone in w. The minimizer lies in
// [-|u|, |u|]; 0 is optimal when the subdifferential at 0 contains 0.
inline double prox_l1_bruteforce(double u, double lambda) {
  if (-u - lambda <= 0.0 && 0.0 <= -u + lambda) return 0.0;
  double lo = -std::abs(u);
  double hi = std::abs(u);
  for (int it = 0; it < 200 && lo < hi; ++it) {
    const double m = 0.5 * (lo + hi);
    if (m == lo || m == hi) break;
    const double g = m - u + (m > 0.0 ? lambda : m < 0.0 ? -lambda : 0.0);
    if (g > 0.0) {
      hi = m;
    } else {
      lo = m;
    }
  }
  return 0.5 * (lo + hi);
}

// Random sparse vector with about density * dim nonzeros in N(0, scale^2).
inline SparseVector random_sparse(std::mt19937_64& gen, std::size_t dim, double density,
                                  double scale = 1.0) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::normal_distribution<double> value(0.0, scale);
  std::vector<SparseEntry> entries;
  for (std::size_t i = 0; i < dim; ++i) {
    if (coin(gen) < density) {
      const double v = value(gen);
      if (v != 0.0) entries.push_back({i, v});
    }
  }
  return SparseVector(std::move(entries));
}

// Labels from a random plane, flipped with probability flip.
inline Dataset random_stream(std::uint64_t seed, std::size_t n, std::size_t dim,
                             double density, double flip = 0.1) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<double> plane(dim);
  for (auto& p : plane) p = g(gen);
  Dataset data;
  for (std::size_t k = 0; k < n; ++k) {
    SparseExample ex;
    ex.x = random_sparse(gen, dim, density);
    double m = 0.0;
    for (const auto& e : ex.x) m += plane[e.index] * e.value;
    bool positive = m >= 0.0;
    if (coin(gen) < flip) positive = !positive;
    ex.y = positive ? Label::kPositive : Label::kNegative;
    data.push_back(std::move(ex));
  }
  return data;
}

// Stream whose examples each have exactly one nonzero.
inline Dataset one_sparse_stream(std::uint64_t seed, std::size_t n, std::size_t dim) {
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<std::size_t> idx(0, dim - 1);
  std::normal_distribution<double> g(0.0, 2.0);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  Dataset data;
  for (std::size_t k = 0; k < n; ++k) {
    double v = g(gen);
    if (v == 0.0) v = 1.0;
    data.push_back({coin(gen) < 0.5 ? Label::kPositive : Label::kNegative,
                    SparseVector({{idx(gen), v}})});
  }
  return data;
}

class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() /
            ("sol_test_" + tag + "_" + std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path write(const std::string& name, const std::string& content) const {
    const auto p = path_ / name;
    std::ofstream(p) << content;
    return p;
  }

 private:
  std::filesystem::path path_;
};

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace sol::testing
