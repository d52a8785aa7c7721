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

#include "sol/baselines.hpp"

#include <cmath>

#include "sol/error.hpp"

namespace sol {
namespace {

bool finite_positive(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

std::string to_string(BaselineKind kind) {
  switch (kind) {
    case BaselineKind::kStg: return "stg";
    case BaselineKind::kFobos: return "fobos";
    case BaselineKind::kAdaFobos: return "ada-fobos";
    case BaselineKind::kAdaRda: return "ada-rda";
    case BaselineKind::kCsOgd: return "cs-ogd";
    case BaselineKind::kCpa: return "cpa";
    case BaselineKind::kPaum: return "paum";
  }
  return "unknown";
}

void BaselineConfig::validate() const {
  if (!finite_positive(eta)) throw SpecError("eta must be positive");
  if (!(std::isfinite(lambda) && lambda >= 0.0)) {
    throw SpecError("lambda must be non-negative");
  }
  if (k_period == 0) throw SpecError("k_period must be at least 1");
  if (!(trunc_threshold >= 0.0)) throw SpecError("trunc_threshold must be >= 0");
  if (!finite_positive(delta)) throw SpecError("delta must be positive");
  if (!std::isfinite(tau_pos) || !std::isfinite(tau_neg)) {
    throw SpecError("tau_pos and tau_neg must be finite");
  }
  if (!finite_positive(c_pos) || !finite_positive(c_neg)) {
    throw SpecError("c_pos and c_neg must be positive");
  }
}

BaselineLearner::BaselineLearner(BaselineConfig cfg) : cfg_(cfg) { cfg_.validate(); }

void BaselineLearner::grow(std::size_t dimension) {
  if (dimension <= w_.size()) return;
  w_.resize(dimension, 0.0);
  // A new coordinate has been zero all along; shrinking zero is a no-op.
  applied_.resize(dimension, t_ - 1);
  if (cfg_.kind == BaselineKind::kAdaFobos || cfg_.kind == BaselineKind::kAdaRda) {
    g2_.resize(dimension, 0.0);
  }
  if (cfg_.kind == BaselineKind::kAdaRda) gsum_.resize(dimension, 0.0);
}

double BaselineLearner::shrink_per_round(std::size_t i) const {
  switch (cfg_.kind) {
    case BaselineKind::kFobos:
      return cfg_.eta * cfg_.lambda;
    case BaselineKind::kAdaFobos:
      return cfg_.eta * cfg_.lambda / (cfg_.delta + std::sqrt(g2_[i]));
    default:
      return 0.0;
  }
}

double BaselineLearner::caught_up(std::size_t i, std::size_t done_rounds) const {
  const double wi = w_[i];
  const std::size_t from = applied_[i];
  if (cfg_.lambda == 0.0 || done_rounds <= from) return wi;
  switch (cfg_.kind) {
    case BaselineKind::kFobos:
    case BaselineKind::kAdaFobos:
      return soft_threshold(
          wi, static_cast<double>(done_rounds - from) * shrink_per_round(i));
    case BaselineKind::kStg: {
      // Truncations fire at rounds that are multiples of K.
      const std::size_t k = cfg_.k_period;
      const std::size_t fired = done_rounds / k - from / k;
      if (fired == 0 || std::abs(wi) > cfg_.trunc_threshold) return wi;
      return soft_threshold(wi, static_cast<double>(fired) * cfg_.eta *
                                    cfg_.lambda * static_cast<double>(k));
    }
    default:
      return wi;
  }
}

double BaselineLearner::ada_rda_weight(std::size_t i, std::size_t done_rounds) const {
  if (done_rounds == 0 || i >= gsum_.size()) return 0.0;
  const double n = static_cast<double>(done_rounds);
  const double g = gsum_[i];
  const double excess = std::abs(g) / n - cfg_.lambda;
  if (excess <= 0.0) return 0.0;
  const double scale = cfg_.eta * n / (cfg_.delta + std::sqrt(g2_[i]));
  return (g > 0.0 ? -1.0 : 1.0) * scale * excess;
}

RoundOutcome BaselineLearner::step(const SparseVector& x, Label y) {
  check_label(y);
  grow(x.required_dimension());
  const std::size_t done = t_ - 1;
  const double yd = to_double(y);

  // Predict with all shrinkage through the previous round applied.
  double margin = 0.0;
  for (const auto& e : x) {
    double wi = 0.0;
    if (cfg_.kind == BaselineKind::kAdaRda) {
      wi = ada_rda_weight(e.index, done);
    } else {
      wi = caught_up(e.index, done);
      w_[e.index] = wi;
      applied_[e.index] = done;
    }
    margin += e.value * wi;
  }

  RoundOutcome out;
  out.margin = margin;
  out.predicted = sign_label(margin);
  const double cost = y == Label::kPositive ? cfg_.c_pos : cfg_.c_neg;
  const double hinge = hinge_loss(margin, y, 1.0);
  out.loss = cfg_.kind == BaselineKind::kCsOgd ? cost * hinge : hinge;

  switch (cfg_.kind) {
    case BaselineKind::kStg:
    case BaselineKind::kFobos:
    case BaselineKind::kCsOgd:
      if (hinge > 0.0) {
        const double step =
            cfg_.kind == BaselineKind::kCsOgd ? cfg_.eta * cost * yd : cfg_.eta * yd;
        for (const auto& e : x) w_[e.index] += step * e.value;
        out.updated = true;
      }
      break;
    case BaselineKind::kAdaFobos:
      if (hinge > 0.0) {
        for (const auto& e : x) {
          g2_[e.index] += e.value * e.value;
          w_[e.index] += cfg_.eta * yd * e.value / (cfg_.delta + std::sqrt(g2_[e.index]));
        }
        out.updated = true;
      }
      break;
    case BaselineKind::kAdaRda:
      // Zero-loss rounds contribute a zero subgradient but still count in t.
      if (hinge > 0.0) {
        for (const auto& e : x) {
          gsum_[e.index] -= yd * e.value;
          g2_[e.index] += e.value * e.value;
        }
        out.updated = true;
      }
      break;
    case BaselineKind::kCpa: {
      const double sq = x.squared_norm();
      if (hinge > 0.0 && sq > 0.0) {
        const double tau = std::min(cost, hinge / sq);
        for (const auto& e : x) w_[e.index] += tau * yd * e.value;
        out.updated = true;
      }
      break;
    }
    case BaselineKind::kPaum: {
      const double tau = y == Label::kPositive ? cfg_.tau_pos : cfg_.tau_neg;
      if (yd * margin <= tau) {
        for (const auto& e : x) w_[e.index] += cfg_.eta * yd * e.value;
        out.updated = !x.empty();
      }
      break;
    }
  }

  // This round's shrink for the touched coordinates; the rest stay pending.
  if (cfg_.kind == BaselineKind::kFobos || cfg_.kind == BaselineKind::kAdaFobos ||
      cfg_.kind == BaselineKind::kStg) {
    for (const auto& e : x) {
      w_[e.index] = caught_up(e.index, t_);
      applied_[e.index] = t_;
    }
  }
  ++t_;
  return out;
}

DenseWeights BaselineLearner::weights() const {
  const std::size_t done = t_ - 1;
  std::vector<double> w(w_.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    w[i] = cfg_.kind == BaselineKind::kAdaRda ? ada_rda_weight(i, done)
                                               : caught_up(i, done);
  }
  return DenseWeights(std::move(w));
}

}  // namespace sol
