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
#include <string>

#include "sol/sparse.hpp"

namespace sol {

enum class Label : int { kNegative = -1, kPositive = 1 };

inline double to_double(Label y) { return static_cast<double>(static_cast<int>(y)); }

// Maps -1 -> kNegative, +1 -> kPositive; anything else throws DataError.
Label label_from_int(int value);

// Validates a Label that may have been produced by an unchecked cast.
void check_label(Label y);

// sign rule shared by every model: margin >= 0 predicts +1.
inline Label sign_label(double margin) {
  return margin >= 0.0 ? Label::kPositive : Label::kNegative;
}

// c_y * max(1 - y * margin, 0).
inline double hinge_loss(double margin, Label y, double cost) {
  const double slack = 1.0 - to_double(y) * margin;
  return slack > 0.0 ? cost * slack : 0.0;
}

struct RoundOutcome {
  double margin = 0.0;
  Label predicted = Label::kPositive;
  // Cost-weighted hinge loss of the weights used for this round's prediction.
  double loss = 0.0;
  bool updated = false;
};

/// One online classifier driven round by round.
///
/// step() computes the prediction from state that does not depend on y, then
/// reveals y and updates. weights() returns the model used for held-out
/// evaluation and never mutates state.
class OnlineModel {
 public:
  virtual ~OnlineModel() = default;

  virtual std::string name() const = 0;
  virtual RoundOutcome step(const SparseVector& x, Label y) = 0;
  virtual DenseWeights weights() const = 0;
  // Number of completed rounds.
  virtual std::size_t rounds() const = 0;
  virtual std::unique_ptr<OnlineModel> clone() const = 0;
};

}  // namespace sol
