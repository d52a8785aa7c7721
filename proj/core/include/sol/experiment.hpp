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
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sol/algorithm.hpp"
#include "sol/data_io.hpp"
#include "sol/eval.hpp"

namespace sol {

enum class Task { kTrainEval, kGridSearch, kSparsitySweep, kSynthGen, kRegret };
enum class OutputFormat { kCsv, kJson };

// {2^lo, ..., 2^hi}
std::vector<double> power_of_two_grid(int lo, int hi);

struct ClassCounts {
  std::size_t positives = 0;
  std::size_t negatives = 0;
};

struct ExperimentSpec {
  Task task = Task::kTrainEval;
  std::vector<AlgorithmSpec> algorithms;

  // Data comes from files or from the synthetic generator.
  std::optional<std::filesystem::path> train_path;
  std::optional<std::filesystem::path> test_path;
  std::optional<SyntheticSpec> synthetic;
  // Optional imbalanced resampling applied after loading.
  std::optional<ClassCounts> train_subsample;
  std::optional<ClassCounts> test_subsample;
  // Replace c+/c- of cost-sensitive algorithms by rho from the train priors.
  bool rho_from_train_priors = false;

  std::vector<double> lambda_grid{0.0};
  std::size_t seeds = 5;
  std::uint64_t base_seed = 1;
  std::size_t folds = 5;
  std::vector<double> eta_grid = power_of_two_grid(-1, 9);
  std::vector<double> secondary_grid = power_of_two_grid(-5, 5);
  std::vector<std::size_t> checkpoints;
  ImbalanceSpec imbalance;

  std::size_t passes = 1;
  std::size_t workers = 1;
  StreamOptions stream;

  // Report file (stdout when empty); output directory for kSynthGen.
  std::filesystem::path output;
  OutputFormat format = OutputFormat::kCsv;
  // Omit wall-clock columns so reruns are byte-identical.
  bool deterministic = false;

  std::vector<std::uint64_t> seed_list() const;
  // Throws SpecError.
  void validate() const;
};

/// One training run, or a mean/std aggregate over seeds when aggregate is
/// "mean" or "std" (seed is then unset).
struct ReportRow {
  std::string algorithm;
  double lambda = 0.0;
  double eta = 0.0;
  double r = 0.0;  // NaN when the algorithm has no r
  double c_pos = 1.0;
  double c_neg = 1.0;
  std::optional<std::uint64_t> seed;
  std::string aggregate;
  double achieved_sparsity = 0.0;
  double test_error = 0.0;
  std::optional<double> weighted_sum;
  double train_time_seconds = 0.0;
  double updates_count = 0.0;
};

// Sorts by (algorithm, lambda, seed) with aggregates last and appends the
// per-(algorithm, lambda) mean and std rows.
std::vector<ReportRow> with_summaries(std::vector<ReportRow> rows);

void write_csv(std::ostream& out, const std::vector<ReportRow>& rows, bool deterministic);
void write_json(std::ostream& out, const std::vector<ReportRow>& rows, bool deterministic);

// Fold id of each example: a seeded permutation dealt round-robin.
std::vector<std::size_t> fold_assignment(std::size_t n, std::size_t folds,
                                         std::uint64_t seed);

struct GridCell {
  double eta = 0.0;
  std::optional<double> secondary;
  double score = 0.0;
};

struct GridSearchResult {
  AlgorithmSpec best;
  double best_score = 0.0;
  // "error_rate" (lower is better) or "weighted_sum" (higher is better).
  std::string metric;
  std::vector<GridCell> table;
  // Position of the winning cell in table.
  std::size_t best_index = 0;
};

/// Cross-validated grid search at lambda = 0 over eta_grid and, where the
/// algorithm has one, secondary_grid. Cost-sensitive algorithms are scored
/// by the weighted sum metric, the rest by error rate. Ties keep the smaller
/// eta, then the smaller secondary value.
GridSearchResult grid_search(const AlgorithmSpec& algorithm, const Dataset& train,
                             const ExperimentSpec& spec);

struct RegretRow {
  std::string algorithm;
  std::uint64_t seed = 0;
  std::size_t t = 0;
  double online_loss = 0.0;
  double comparator_loss = 0.0;
  double regret = 0.0;
  double regret_per_round = 0.0;
};

// Trains on a seeded permutation of train. At each checkpoint T the regret is
// taken against the offline comparator fitted to the first T examples of the
// stream (lambda = 0, same costs).
std::vector<RegretRow> regret_experiment(const AlgorithmSpec& algorithm,
                                         const Dataset& train, std::uint64_t seed,
                                         const std::vector<std::size_t>& checkpoints,
                                         const ComparatorOptions& comparator = {});

SyntheticSpec synthetic_spec_from_json(const std::string& text);
std::string synthetic_spec_to_json(const SyntheticSpec& spec);

struct LoadedData {
  Dataset train;
  Dataset test;
  std::size_t ambient_dim = 0;
};

LoadedData load_data(const ExperimentSpec& spec);

// Executes spec.task and writes its report. Errors surface as SpecError,
// DataError or NumericError.
void run_experiment(const ExperimentSpec& spec);

}  // namespace sol
