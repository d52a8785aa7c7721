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
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sol/model.hpp"
#include "sol/sparse.hpp"

namespace sol {

enum class LearnerKind {
  kFsol,
  kSsolFull,
  kSsolDiag,
  kCsFsol,
  kCsSsolFull,
  kCsSsolDiag,
};

enum class LambdaSchedule {
  kConstEtaLambda,  // lambda_t = eta * lambda
  kInverseT,        // lambda_t = lambda / t
  kConstant,        // lambda_t = lambda
};

bool is_second_order(LearnerKind kind);
bool is_cost_sensitive(LearnerKind kind);
std::string to_string(LearnerKind kind);

struct LearnerConfig {
  LearnerKind kind = LearnerKind::kFsol;
  double eta = 1.0;
  double lambda = 0.0;
  double r = 1.0;
  double c_pos = 1.0;
  double c_neg = 1.0;
  // Unset means the kind's default: kConstEtaLambda for first-order kinds,
  // kInverseT for second-order kinds.
  std::optional<LambdaSchedule> schedule;
  // Largest ambient dimension accepted by the full-matrix kinds.
  std::size_t full_dim_cap = 4096;

  LambdaSchedule effective_schedule() const;
  // Throws SpecError on out-of-range parameters.
  void validate() const;
};

// Threshold applied at round t (t >= 1).
double lambda_schedule(const LearnerConfig& cfg, std::size_t t);

/// Dense symmetric inverse A^{-1} for the full second-order learner.
/// Stored row-major; coordinates past dimension() read as the identity.
class FullInverse {
 public:
  explicit FullInverse(std::size_t dimension = 0);

  std::size_t dimension() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const {
    if (i < n_ && j < n_) return data_[i * n_ + j];
    return i == j ? 1.0 : 0.0;
  }

  // Extends with identity rows/columns up to dimension.
  void grow_to(std::size_t dimension);

  // Sherman-Morrison update for A <- A + x x^T / r.
  void rank_one_update(const SparseVector& x, double r);

  // (A^{-1} theta)_i.
  double row_dot(std::size_t i, const DenseWeights& theta) const;

 private:
  std::size_t n_;
  std::vector<double> data_;
  std::vector<double> scratch_;
};

/// Diagonal A^{-1}; untouched coordinates are 1.
class DiagonalInverse {
 public:
  explicit DiagonalInverse(std::size_t dimension_hint = 0)
      : diag_(dimension_hint, 1.0) {}

  double operator[](std::size_t i) const {
    return i < diag_.size() ? diag_[i] : 1.0;
  }
  std::size_t dimension() const { return diag_.size(); }

  // a_i <- a_i - (a_i x_i)^2 / (r + sum_j a_j x_j^2) on x's support.
  void update(const SparseVector& x, double r);

 private:
  std::vector<double> diag_;
};

struct ModelState {
  DenseWeights theta;
  std::variant<std::monostate, FullInverse, DiagonalInverse> a_inv;
  std::size_t t = 1;

  const FullInverse* full_inverse() const { return std::get_if<FullInverse>(&a_inv); }
  const DiagonalInverse* diagonal_inverse() const {
    return std::get_if<DiagonalInverse>(&a_inv);
  }
};

/// The dual-averaging sparse learners: FSOL, SSOL (full and diagonal) and
/// their cost-sensitive variants.
///
/// Each round computes u_t from the accumulator theta (identity for FSOL,
/// A_t^{-1} theta for SSOL), thresholds it with lambda_t, predicts, and on a
/// positive hinge loss adds eta * c_y * y * x to theta. w_t is evaluated only
/// on the current example's support; weights() materializes the full vector.
class SparseLearner final : public OnlineModel {
 public:
  // Validates cfg and initializes theta = 0, t = 1, A^{-1} = I.
  explicit SparseLearner(LearnerConfig cfg, std::size_t ambient_dim_hint = 0);

  std::string name() const override { return to_string(cfg_.kind); }
  RoundOutcome step(const SparseVector& x, Label y) override;
  // Thresholded with the most recent round's lambda_t.
  DenseWeights weights() const override;
  std::size_t rounds() const override { return state_.t - 1; }
  std::unique_ptr<OnlineModel> clone() const override {
    return std::make_unique<SparseLearner>(*this);
  }

  const LearnerConfig& config() const { return cfg_; }
  const ModelState& state() const { return state_; }
  // u = A^{-1} theta (theta itself for first-order kinds).
  DenseWeights dual_point() const;

 private:
  RoundOutcome finish(const SparseVector& x, Label y, double margin);

  LearnerConfig cfg_;
  ModelState state_;
};

// Single rounds on a bare state. Each checks that cfg.kind matches the step.
RoundOutcome fsol_step(ModelState& state, const SparseVector& x, Label y,
                       const LearnerConfig& cfg);
RoundOutcome ssol_full_step(ModelState& state, const SparseVector& x, Label y,
                            const LearnerConfig& cfg);
RoundOutcome ssol_diag_step(ModelState& state, const SparseVector& x, Label y,
                            const LearnerConfig& cfg);

// Convenience for SparseLearner(cfg, hint).
SparseLearner make_learner(const LearnerConfig& cfg, std::size_t ambient_dim_hint = 0);

}  // namespace sol
