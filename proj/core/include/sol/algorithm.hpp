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
#include <string_view>
#include <variant>

#include "sol/baselines.hpp"
#include "sol/learner.hpp"
#include "sol/model.hpp"

namespace sol {

/// Any runnable algorithm: a SOL learner or one of the baselines.
/// The CLI names are fsol, ssol, ssol-diag, cs-fsol, cs-ssol, cs-ssol-diag,
/// stg, fobos, ada-fobos, ada-rda, cs-ogd, cpa and paum.
struct AlgorithmSpec {
  std::variant<LearnerConfig, BaselineConfig> config;

  std::string name() const;
  bool cost_sensitive() const;

  double eta() const;
  double lambda() const;
  // r for the second-order learners, NaN elsewhere.
  double r() const;
  double c_pos() const;
  double c_neg() const;

  void set_eta(double eta);
  void set_lambda(double lambda);
  void set_costs(double c_pos, double c_neg);

  // The non-learning-rate hyperparameter tuned by grid search, if any:
  // r (SOL second order), delta (Ada-*), C scale (CPA), tau_pos (PAUM).
  bool has_secondary() const;
  bool has_learning_rate() const;
  void set_secondary(double value);

  void validate() const;
};

// Parses a CLI algorithm name into a spec with default hyperparameters.
// Throws SpecError for unknown names.
AlgorithmSpec algorithm_from_name(std::string_view name);

std::unique_ptr<OnlineModel> make_model(const AlgorithmSpec& spec,
                                        std::size_t ambient_dim_hint = 0);

}  // namespace sol
