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
#include <stdexcept>
#include <string>

namespace sol {

// Invalid configuration or experiment description. Maps to CLI exit code 2.
class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed or insufficient input data. Maps to CLI exit code 3.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A LIBSVM line that failed to parse. line_number is 1-based, 0 when unknown.
class ParseError : public DataError {
 public:
  ParseError(const std::string& what, std::size_t line_number)
      : DataError(line_number == 0 ? what
                                   : "line " + std::to_string(line_number) +
                                         ": " + what),
        line_number_(line_number) {}

  std::size_t line_number() const noexcept { return line_number_; }

 private:
  std::size_t line_number_;
};

// Non-finite values or a broken numeric invariant. Maps to CLI exit code 4.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sol
