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

#include "sol/model.hpp"

#include <string>

#include "sol/error.hpp"

namespace sol {

Label label_from_int(int value) {
  if (value == 1) return Label::kPositive;
  if (value == -1) return Label::kNegative;
  throw DataError("label must be -1 or +1, got " + std::to_string(value));
}

void check_label(Label y) {
  const int v = static_cast<int>(y);
  if (v != 1 && v != -1) {
    throw DataError("label must be -1 or +1, got " + std::to_string(v));
  }
}

}  // namespace sol
