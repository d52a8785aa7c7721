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
#include <optional>
#include <span>
#include <vector>

#include "sol/algorithm.hpp"
#include "sol/data_io.hpp"
#include "sol/model.hpp"
#include "sol/sparse.hpp"

namespace sol {

struct ConfusionCounts {
  std::size_t t_pos = 0;
  std::size_t t_neg = 0;
  std::size_t m_pos = 0;  // false negatives
  std::size_t m_neg = 0;  // false positives

  void record(Label y, Label predicted);
  std::size_t total() const { return t_pos + t_neg; }
  std::size_t mistakes() const { return m_pos + m_neg; }

  friend bool operator==(const ConfusionCounts&, const ConfusionCounts&) = default;
};

ConfusionCounts record(ConfusionCounts conf, Label y, Label predicted);

struct ImbalanceSpec {
  double mu_pos = 0.5;
  double mu_neg = 0.5;
  // Class totals, needed only by rho_from_priors.
  std::optional<std::size_t> t_pos;
  std::optional<std::size_t> t_neg;

  void validate() const;
};

struct Metrics {
  double error_rate = 0.0;
  // Undefined when the corresponding class never occurs.
  std::optional<double> sensitivity;
  std::optional<double> specificity;
  // mu_pos * sensitivity + mu_neg * specificity; needs both classes.
  std::optional<double> weighted_sum;
};

// Throws DataError when conf is empty.
Metrics metrics(const ConfusionCounts& conf, const ImbalanceSpec& spec = {});

// mu_pos * T- / (mu_neg * T+): the positive-class cost with c- = 1.
double rho_from_priors(const ImbalanceSpec& spec);

struct TrainOptions {
  std::size_t passes = 1;
  // Keep the per-round loss series (needed for regret traces).
  bool record_losses = false;
};

struct TrainStats {
  std::size_t rounds = 0;
  std::size_t updates = 0;
  double cumulative_loss = 0.0;
  // Online (predict-then-update) confusion over all rounds.
  ConfusionCounts online;
  std::vector<double> losses;
  // Wall time of the update loop only.
  double seconds = 0.0;
};

// One or more passes over data in the given visiting order.
TrainStats train(OnlineModel& model, const Dataset& data,
                 std::span<const std::size_t> order, const TrainOptions& options = {});

struct EvalResult {
  ConfusionCounts counts;
  Metrics metrics;
};

// Frozen-weight evaluation; the model is not touched.
EvalResult evaluate(const DenseWeights& w, const Dataset& data,
                    const ImbalanceSpec& spec = {});
EvalResult evaluate(const OnlineModel& model, const Dataset& data,
                    const ImbalanceSpec& spec = {});

struct ComparatorOptions {
  std::size_t epochs = 300;
  // Step k has length step0 / sqrt(k) along the normalized subgradient.
  double step0 = 1.0;
};

struct ComparatorResult {
  DenseWeights w;
  double objective = 0.0;
};

// sum_t c_{y_t} [1 - y_t w.x_t]_+ + lambda ||w||_1
double comparator_objective(const Dataset& data, const DenseWeights& w,
                            double lambda, double c_pos = 1.0, double c_neg = 1.0);

/// Offline approximation of argmin_w of comparator_objective: full-batch
/// normalized subgradient descent from w = 0 for a fixed number of epochs,
/// returning the best iterate seen. Deterministic.
ComparatorResult offline_comparator(const Dataset& data, double lambda,
                                    double c_pos = 1.0, double c_neg = 1.0,
                                    const ComparatorOptions& options = {});

// Cost-weighted hinge losses of fixed weights w, in visiting order.
std::vector<double> fixed_losses(const Dataset& data, std::span<const std::size_t> order,
                                 const DenseWeights& w, double c_pos = 1.0,
                                 double c_neg = 1.0);

struct RegretCheckpoint {
  std::size_t t = 0;
  double regret = 0.0;
};

struct RegretTrace {
  std::vector<double> cumulative_online;
  std::vector<double> cumulative_comparator;
  std::vector<RegretCheckpoint> checkpoints;
};

// R_T = sum_{t<=T} (online_t - comparator_t) at each checkpoint T (1-based).
RegretTrace regret_trace(std::span<const double> online_losses,
                         std::span<const double> comparator_losses,
                         std::span<const std::size_t> checkpoints);

struct SweepOptions {
  std::vector<double> lambda_grid;
  std::vector<std::uint64_t> seeds;
  // Dimension that sparsity is measured against.
  std::size_t ambient_dim = 0;
  std::size_t workers = 1;
  ImbalanceSpec imbalance;
  TrainOptions train;
  StreamOptions stream;
};

struct SweepCell {
  double lambda = 0.0;
  std::uint64_t seed = 0;
  double sparsity = 0.0;
  double test_error = 0.0;
  std::optional<double> weighted_sum;
  double train_seconds = 0.0;
  std::size_t updates = 0;
};

struct SweepPoint {
  double lambda = 0.0;
  double mean_sparsity = 0.0;
  double std_sparsity = 0.0;
  double mean_error = 0.0;
  double std_error = 0.0;
};

struct SweepResult {
  // Sorted by (lambda, seed).
  std::vector<SweepCell> cells;
  // One per lambda, in grid order sorted ascending.
  std::vector<SweepPoint> points;
};

/// For every (lambda, seed): one training run over a seeded permutation of
/// train, then the final model's sparsity and its frozen test error.
/// Cells run on options.workers threads.
SweepResult sparsity_sweep(const AlgorithmSpec& base, const Dataset& train,
                           const Dataset& test, const SweepOptions& options);

// Sample mean and standard deviation (n - 1 denominator; 0 for n < 2).
struct MeanStd {
  double mean = 0.0;
  double std = 0.0;
};
MeanStd mean_std(std::span<const double> values);

}  // namespace sol
