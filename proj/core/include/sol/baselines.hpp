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
#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "sol/model.hpp"
#include "sol/sparse.hpp"

namespace sol {

enum class BaselineKind { kStg, kFobos, kAdaFobos, kAdaRda, kCsOgd, kCpa, kPaum };

std::string to_string(BaselineKind kind);

struct BaselineConfig {
  BaselineKind kind = BaselineKind::kFobos;
  double eta = 1.0;
  double lambda = 0.0;
  // STG truncation period K and the ceiling below which coordinates shrink.
  std::size_t k_period = 10;
  double trunc_threshold = std::numeric_limits<double>::infinity();
  // Damping added to sqrt(G_i) in the adaptive kinds.
  double delta = 1.0;
  // PAUM updates whenever y * margin <= tau_y.
  double tau_pos = 1.0;
  double tau_neg = 0.0;
  // Cost weights for CS-OGD; aggressiveness caps C+/C- for CPA.
  double c_pos = 1.0;
  double c_neg = 1.0;

  void validate() const;
};

/// Comparison learners: truncated gradient (STG), FOBOS, AdaGrad-FOBOS,
/// AdaGrad-RDA, cost-sensitive OGD, cost-sensitive PA and PAUM.
///
/// Per-round soft thresholds that touch every coordinate (FOBOS, Ada-FOBOS,
/// STG) are applied lazily: each coordinate remembers how many rounds of
/// shrinkage it has absorbed and catches up when it is next read. Successive
/// soft thresholds with no gradient step in between compose additively, so
/// the result matches the eager update up to rounding.
///
/// RoundOutcome::loss is the (cost-weighted for CS-OGD) hinge loss of the
/// prediction weights; RoundOutcome::updated reports whether the kind's own
/// update rule fired.
class BaselineLearner final : public OnlineModel {
 public:
  explicit BaselineLearner(BaselineConfig cfg);

  std::string name() const override { return to_string(cfg_.kind); }
  RoundOutcome step(const SparseVector& x, Label y) override;
  DenseWeights weights() const override;
  std::size_t rounds() const override { return t_ - 1; }
  std::unique_ptr<OnlineModel> clone() const override {
    return std::make_unique<BaselineLearner>(*this);
  }

  const BaselineConfig& config() const { return cfg_; }
  // Per-coordinate sums of squared gradients (adaptive kinds only).
  const std::vector<double>& squared_gradient_sums() const { return g2_; }

 private:
  void grow(std::size_t dimension);
  // Pending shrink of coordinate i for rounds it has not absorbed yet.
  double caught_up(std::size_t i, std::size_t done_rounds) const;
  double shrink_per_round(std::size_t i) const;
  double ada_rda_weight(std::size_t i, std::size_t done_rounds) const;

  BaselineConfig cfg_;
  std::vector<double> w_;
  // Rounds of shrinkage already applied per coordinate (FOBOS, Ada-FOBOS, STG).
  std::vector<std::size_t> applied_;
  std::vector<double> g2_;
  std::vector<double> gsum_;
  std::size_t t_ = 1;
};

}  // namespace sol
