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

#include "sol/learner.hpp"

#include <cmath>
#include <string>

#include "sol/error.hpp"

namespace sol {
namespace {

bool finite_positive(double v) { return std::isfinite(v) && v > 0.0; }

double class_cost(const LearnerConfig& cfg, Label y) {
  return y == Label::kPositive ? cfg.c_pos : cfg.c_neg;
}

// Shared tail of every round: loss, theta update, t advance.
RoundOutcome finish_round(ModelState& state, const SparseVector& x, Label y,
                          const LearnerConfig& cfg, double margin) {
  RoundOutcome out;
  out.margin = margin;
  out.predicted = sign_label(margin);
  const double cost = class_cost(cfg, y);
  out.loss = hinge_loss(margin, y, cost);
  if (out.loss > 0.0) {
    scaled_add(state.theta, x, cfg.eta * cost * to_double(y));
    out.updated = true;
  }
  ++state.t;
  return out;
}

void require_kind(const LearnerConfig& cfg, LearnerKind a, LearnerKind b,
                  const char* step) {
  if (cfg.kind != a && cfg.kind != b) {
    throw SpecError(std::string(step) + " does not accept kind " +
                    to_string(cfg.kind));
  }
}

}  // namespace

bool is_second_order(LearnerKind kind) {
  return kind != LearnerKind::kFsol && kind != LearnerKind::kCsFsol;
}

bool is_cost_sensitive(LearnerKind kind) {
  return kind == LearnerKind::kCsFsol || kind == LearnerKind::kCsSsolFull ||
         kind == LearnerKind::kCsSsolDiag;
}

std::string to_string(LearnerKind kind) {
  switch (kind) {
    case LearnerKind::kFsol: return "fsol";
    case LearnerKind::kSsolFull: return "ssol";
    case LearnerKind::kSsolDiag: return "ssol-diag";
    case LearnerKind::kCsFsol: return "cs-fsol";
    case LearnerKind::kCsSsolFull: return "cs-ssol";
    case LearnerKind::kCsSsolDiag: return "cs-ssol-diag";
  }
  return "unknown";
}

LambdaSchedule LearnerConfig::effective_schedule() const {
  if (schedule) return *schedule;
  return is_second_order(kind) ? LambdaSchedule::kInverseT
                               : LambdaSchedule::kConstEtaLambda;
}

void LearnerConfig::validate() const {
  if (!finite_positive(eta)) throw SpecError("eta must be positive");
  if (!(std::isfinite(lambda) && lambda >= 0.0)) {
    throw SpecError("lambda must be non-negative");
  }
  if (!finite_positive(r)) throw SpecError("r must be positive");
  if (!finite_positive(c_pos) || !finite_positive(c_neg)) {
    throw SpecError("c_pos and c_neg must be positive");
  }
  if (!is_cost_sensitive(kind) && (c_pos != 1.0 || c_neg != 1.0)) {
    throw SpecError(to_string(kind) +
                    " is cost-insensitive; c_pos and c_neg must both be 1");
  }
  if (full_dim_cap == 0) throw SpecError("full_dim_cap must be positive");
}

double lambda_schedule(const LearnerConfig& cfg, std::size_t t) {
  if (t == 0) throw SpecError("lambda_schedule: t starts at 1");
  switch (cfg.effective_schedule()) {
    case LambdaSchedule::kConstEtaLambda: return cfg.eta * cfg.lambda;
    case LambdaSchedule::kInverseT: return cfg.lambda / static_cast<double>(t);
    case LambdaSchedule::kConstant: return cfg.lambda;
  }
  return cfg.lambda;
}

FullInverse::FullInverse(std::size_t dimension) : n_(0) { grow_to(dimension); }

void FullInverse::grow_to(std::size_t dimension) {
  if (dimension <= n_) return;
  std::vector<double> next(dimension * dimension, 0.0);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) next[i * dimension + j] = data_[i * n_ + j];
  }
  for (std::size_t i = n_; i < dimension; ++i) next[i * dimension + i] = 1.0;
  data_ = std::move(next);
  n_ = dimension;
}

void FullInverse::rank_one_update(const SparseVector& x, double r) {
  grow_to(x.required_dimension());
  // v = A^{-1} x, accumulated row by row (A^{-1} is symmetric).
  scratch_.assign(n_, 0.0);
  for (const auto& e : x) {
    const double* row = &data_[e.index * n_];
    for (std::size_t j = 0; j < n_; ++j) scratch_[j] += e.value * row[j];
  }
  double denom = r;
  for (const auto& e : x) denom += e.value * scratch_[e.index];
  for (std::size_t i = 0; i < n_; ++i) {
    const double vi = scratch_[i];
    if (vi == 0.0) continue;
    double* row = &data_[i * n_];
    for (std::size_t j = 0; j < n_; ++j) row[j] -= vi * scratch_[j] / denom;
  }
}

double FullInverse::row_dot(std::size_t i, const DenseWeights& theta) const {
  const auto th = theta.values();
  if (i >= n_) return theta[i];
  const double* row = &data_[i * n_];
  const std::size_t m = std::min(n_, th.size());
  double s = 0.0;
  for (std::size_t j = 0; j < m; ++j) s += row[j] * th[j];
  // theta never outgrows the matrix, since both grow from the same examples.
  return s;
}

void DiagonalInverse::update(const SparseVector& x, double r) {
  double denom = r;
  for (const auto& e : x) denom += ((*this)[e.index] * e.value) * e.value;
  if (x.required_dimension() > diag_.size()) {
    diag_.resize(x.required_dimension(), 1.0);
  }
  for (const auto& e : x) {
    const double ax = diag_[e.index] * e.value;
    diag_[e.index] -= ax * ax / denom;
  }
}

RoundOutcome fsol_step(ModelState& state, const SparseVector& x, Label y,
                       const LearnerConfig& cfg) {
  require_kind(cfg, LearnerKind::kFsol, LearnerKind::kCsFsol, "fsol_step");
  check_label(y);
  const double lambda_t = lambda_schedule(cfg, state.t);
  double margin = 0.0;
  for (const auto& e : x) {
    margin += e.value * soft_threshold(state.theta[e.index], lambda_t);
  }
  return finish_round(state, x, y, cfg, margin);
}

RoundOutcome ssol_full_step(ModelState& state, const SparseVector& x, Label y,
                            const LearnerConfig& cfg) {
  require_kind(cfg, LearnerKind::kSsolFull, LearnerKind::kCsSsolFull,
               "ssol_full_step");
  check_label(y);
  auto* inv = std::get_if<FullInverse>(&state.a_inv);
  if (inv == nullptr) throw SpecError("ssol_full_step: state has no full inverse");
  if (x.required_dimension() > cfg.full_dim_cap) {
    throw SpecError("feature index " + std::to_string(x.required_dimension() - 1) +
                    " exceeds the full-matrix dimension cap of " +
                    std::to_string(cfg.full_dim_cap) + "; use ssol-diag");
  }
  inv->rank_one_update(x, cfg.r);
  const double lambda_t = lambda_schedule(cfg, state.t);
  double margin = 0.0;
  for (const auto& e : x) {
    margin += e.value * soft_threshold(inv->row_dot(e.index, state.theta), lambda_t);
  }
  return finish_round(state, x, y, cfg, margin);
}

RoundOutcome ssol_diag_step(ModelState& state, const SparseVector& x, Label y,
                            const LearnerConfig& cfg) {
  require_kind(cfg, LearnerKind::kSsolDiag, LearnerKind::kCsSsolDiag,
               "ssol_diag_step");
  check_label(y);
  auto* inv = std::get_if<DiagonalInverse>(&state.a_inv);
  if (inv == nullptr) {
    throw SpecError("ssol_diag_step: state has no diagonal inverse");
  }
  inv->update(x, cfg.r);
  const double lambda_t = lambda_schedule(cfg, state.t);
  double margin = 0.0;
  for (const auto& e : x) {
    margin += e.value *
              soft_threshold((*inv)[e.index] * state.theta[e.index], lambda_t);
  }
  return finish_round(state, x, y, cfg, margin);
}

SparseLearner::SparseLearner(LearnerConfig cfg, std::size_t ambient_dim_hint)
    : cfg_(std::move(cfg)) {
  cfg_.validate();
  switch (cfg_.kind) {
    case LearnerKind::kSsolFull:
    case LearnerKind::kCsSsolFull:
      if (ambient_dim_hint > cfg_.full_dim_cap) {
        throw SpecError("ambient dimension " + std::to_string(ambient_dim_hint) +
                        " exceeds the full-matrix dimension cap of " +
                        std::to_string(cfg_.full_dim_cap) + "; use ssol-diag");
      }
      state_.a_inv = FullInverse(ambient_dim_hint);
      break;
    case LearnerKind::kSsolDiag:
    case LearnerKind::kCsSsolDiag:
      state_.a_inv = DiagonalInverse(ambient_dim_hint);
      break;
    default:
      break;
  }
}

RoundOutcome SparseLearner::step(const SparseVector& x, Label y) {
  switch (cfg_.kind) {
    case LearnerKind::kFsol:
    case LearnerKind::kCsFsol:
      return fsol_step(state_, x, y, cfg_);
    case LearnerKind::kSsolFull:
    case LearnerKind::kCsSsolFull:
      return ssol_full_step(state_, x, y, cfg_);
    case LearnerKind::kSsolDiag:
    case LearnerKind::kCsSsolDiag:
      return ssol_diag_step(state_, x, y, cfg_);
  }
  throw SpecError("unknown learner kind");
}

DenseWeights SparseLearner::dual_point() const {
  if (const auto* full = state_.full_inverse()) {
    std::vector<double> u(std::max(full->dimension(), state_.theta.dimension()));
    for (std::size_t i = 0; i < u.size(); ++i) u[i] = full->row_dot(i, state_.theta);
    return DenseWeights(std::move(u));
  }
  if (const auto* diag = state_.diagonal_inverse()) {
    const auto th = state_.theta.values();
    std::vector<double> u(th.size());
    for (std::size_t i = 0; i < u.size(); ++i) u[i] = (*diag)[i] * th[i];
    return DenseWeights(std::move(u));
  }
  return state_.theta;
}

DenseWeights SparseLearner::weights() const {
  const std::size_t last = state_.t > 1 ? state_.t - 1 : 1;
  return soft_threshold(dual_point(), lambda_schedule(cfg_, last));
}

SparseLearner make_learner(const LearnerConfig& cfg, std::size_t ambient_dim_hint) {
  return SparseLearner(cfg, ambient_dim_hint);
}

}  // namespace sol
