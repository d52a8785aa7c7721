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

#include "sol/algorithm.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "sol/error.hpp"

namespace sol {
namespace {

template <typename... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <typename... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

}  // namespace

std::string AlgorithmSpec::name() const {
  return std::visit([](const auto& c) { return to_string(c.kind); }, config);
}

bool AlgorithmSpec::cost_sensitive() const {
  return std::visit(
      Overloaded{
          [](const LearnerConfig& c) { return is_cost_sensitive(c.kind); },
          [](const BaselineConfig& c) {
            return c.kind == BaselineKind::kCsOgd || c.kind == BaselineKind::kCpa ||
                   c.kind == BaselineKind::kPaum;
          },
      },
      config);
}

double AlgorithmSpec::eta() const {
  return std::visit([](const auto& c) { return c.eta; }, config);
}

double AlgorithmSpec::lambda() const {
  return std::visit([](const auto& c) { return c.lambda; }, config);
}

double AlgorithmSpec::r() const {
  if (const auto* c = std::get_if<LearnerConfig>(&config); c && is_second_order(c->kind)) {
    return c->r;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

double AlgorithmSpec::c_pos() const {
  return std::visit([](const auto& c) { return c.c_pos; }, config);
}

double AlgorithmSpec::c_neg() const {
  return std::visit([](const auto& c) { return c.c_neg; }, config);
}

void AlgorithmSpec::set_eta(double eta) {
  std::visit([eta](auto& c) { c.eta = eta; }, config);
}

void AlgorithmSpec::set_lambda(double lambda) {
  std::visit([lambda](auto& c) { c.lambda = lambda; }, config);
}

void AlgorithmSpec::set_costs(double c_pos, double c_neg) {
  std::visit(
      [&](auto& c) {
        c.c_pos = c_pos;
        c.c_neg = c_neg;
      },
      config);
}

bool AlgorithmSpec::has_secondary() const {
  return std::visit(
      Overloaded{
          [](const LearnerConfig& c) { return is_second_order(c.kind); },
          [](const BaselineConfig& c) {
            return c.kind == BaselineKind::kAdaFobos ||
                   c.kind == BaselineKind::kAdaRda || c.kind == BaselineKind::kCpa ||
                   c.kind == BaselineKind::kPaum;
          },
      },
      config);
}

bool AlgorithmSpec::has_learning_rate() const {
  const auto* b = std::get_if<BaselineConfig>(&config);
  return b == nullptr || b->kind != BaselineKind::kCpa;
}

void AlgorithmSpec::set_secondary(double value) {
  std::visit(
      Overloaded{
          [value](LearnerConfig& c) {
            if (is_second_order(c.kind)) c.r = value;
          },
          [value](BaselineConfig& c) {
            switch (c.kind) {
              case BaselineKind::kAdaFobos:
              case BaselineKind::kAdaRda:
                c.delta = value;
                break;
              case BaselineKind::kCpa: {
                // Scale both caps, keeping the configured C+/C- ratio.
                const double ratio = c.c_pos / c.c_neg;
                c.c_neg = value;
                c.c_pos = value * ratio;
                break;
              }
              case BaselineKind::kPaum:
                c.tau_pos = value;
                break;
              default:
                break;
            }
          },
      },
      config);
}

void AlgorithmSpec::validate() const {
  std::visit([](const auto& c) { c.validate(); }, config);
}

AlgorithmSpec algorithm_from_name(std::string_view name) {
  auto learner = [](LearnerKind kind) {
    LearnerConfig c;
    c.kind = kind;
    return AlgorithmSpec{c};
  };
  auto baseline = [](BaselineKind kind) {
    BaselineConfig c;
    c.kind = kind;
    return AlgorithmSpec{c};
  };
  if (name == "fsol") return learner(LearnerKind::kFsol);
  if (name == "ssol") return learner(LearnerKind::kSsolFull);
  if (name == "ssol-diag") return learner(LearnerKind::kSsolDiag);
  if (name == "cs-fsol") return learner(LearnerKind::kCsFsol);
  if (name == "cs-ssol") return learner(LearnerKind::kCsSsolFull);
  if (name == "cs-ssol-diag") return learner(LearnerKind::kCsSsolDiag);
  if (name == "stg") return baseline(BaselineKind::kStg);
  if (name == "fobos") return baseline(BaselineKind::kFobos);
  if (name == "ada-fobos") return baseline(BaselineKind::kAdaFobos);
  if (name == "ada-rda") return baseline(BaselineKind::kAdaRda);
  if (name == "cs-ogd") return baseline(BaselineKind::kCsOgd);
  if (name == "cpa") return baseline(BaselineKind::kCpa);
  if (name == "paum") return baseline(BaselineKind::kPaum);
  throw SpecError("unknown algorithm '" + std::string(name) + "'");
}

std::unique_ptr<OnlineModel> make_model(const AlgorithmSpec& spec,
                                        std::size_t ambient_dim_hint) {
  return std::visit(
      Overloaded{
          [ambient_dim_hint](const LearnerConfig& c) -> std::unique_ptr<OnlineModel> {
            return std::make_unique<SparseLearner>(c, ambient_dim_hint);
          },
          [](const BaselineConfig& c) -> std::unique_ptr<OnlineModel> {
            return std::make_unique<BaselineLearner>(c);
          },
      },
      spec.config);
}

}  // namespace sol
