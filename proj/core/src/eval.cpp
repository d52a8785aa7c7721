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

#include "sol/eval.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "sol/error.hpp"
#include "sol/parallel.hpp"

namespace sol {

void ConfusionCounts::record(Label y, Label predicted) {
  if (y == Label::kPositive) {
    ++t_pos;
    if (predicted != y) ++m_pos;
  } else {
    ++t_neg;
    if (predicted != y) ++m_neg;
  }
}

ConfusionCounts record(ConfusionCounts conf, Label y, Label predicted) {
  conf.record(y, predicted);
  return conf;
}

void ImbalanceSpec::validate() const {
  if (!(mu_pos >= 0.0 && mu_pos <= 1.0 && mu_neg >= 0.0 && mu_neg <= 1.0)) {
    throw SpecError("mu_pos and mu_neg must lie in [0, 1]");
  }
  if (std::abs(mu_pos + mu_neg - 1.0) > 1e-12) {
    throw SpecError("mu_pos + mu_neg must equal 1");
  }
}

Metrics metrics(const ConfusionCounts& conf, const ImbalanceSpec& spec) {
  spec.validate();
  if (conf.total() == 0) throw DataError("metrics: no examples recorded");
  Metrics m;
  m.error_rate = static_cast<double>(conf.mistakes()) / static_cast<double>(conf.total());
  if (conf.t_pos > 0) {
    m.sensitivity = static_cast<double>(conf.t_pos - conf.m_pos) /
                    static_cast<double>(conf.t_pos);
  }
  if (conf.t_neg > 0) {
    m.specificity = static_cast<double>(conf.t_neg - conf.m_neg) /
                    static_cast<double>(conf.t_neg);
  }
  if (m.sensitivity && m.specificity) {
    m.weighted_sum = spec.mu_pos * *m.sensitivity + spec.mu_neg * *m.specificity;
  }
  return m;
}

double rho_from_priors(const ImbalanceSpec& spec) {
  spec.validate();
  if (!spec.t_pos || !spec.t_neg || *spec.t_pos == 0 || *spec.t_neg == 0) {
    throw SpecError("rho_from_priors: positive class totals T+ and T- are required");
  }
  if (spec.mu_neg <= 0.0) throw SpecError("rho_from_priors: mu_neg must be positive");
  return spec.mu_pos * static_cast<double>(*spec.t_neg) /
         (spec.mu_neg * static_cast<double>(*spec.t_pos));
}

TrainStats train(OnlineModel& model, const Dataset& data,
                 std::span<const std::size_t> order, const TrainOptions& options) {
  TrainStats stats;
  if (options.record_losses) stats.losses.reserve(order.size() * options.passes);
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t pass = 0; pass < options.passes; ++pass) {
    for (std::size_t idx : order) {
      const SparseExample& ex = data.at(idx);
      const RoundOutcome out = model.step(ex.x, ex.y);
      if (!std::isfinite(out.margin)) {
        throw NumericError(model.name() + ": non-finite margin at round " +
                           std::to_string(stats.rounds + 1));
      }
      ++stats.rounds;
      stats.updates += out.updated;
      stats.cumulative_loss += out.loss;
      stats.online.record(ex.y, out.predicted);
      if (options.record_losses) stats.losses.push_back(out.loss);
    }
  }
  stats.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return stats;
}

EvalResult evaluate(const DenseWeights& w, const Dataset& data,
                    const ImbalanceSpec& spec) {
  EvalResult result;
  for (const auto& ex : data) result.counts.record(ex.y, sign_label(dot(ex.x, w)));
  result.metrics = metrics(result.counts, spec);
  return result;
}

EvalResult evaluate(const OnlineModel& model, const Dataset& data,
                    const ImbalanceSpec& spec) {
  return evaluate(model.weights(), data, spec);
}

double comparator_objective(const Dataset& data, const DenseWeights& w,
                            double lambda, double c_pos, double c_neg) {
  double total = 0.0;
  for (const auto& ex : data) {
    total += hinge_loss(dot(ex.x, w), ex.y, ex.y == Label::kPositive ? c_pos : c_neg);
  }
  double l1 = 0.0;
  for (double v : w.values()) l1 += std::abs(v);
  return total + lambda * l1;
}

ComparatorResult offline_comparator(const Dataset& data, double lambda,
                                    double c_pos, double c_neg,
                                    const ComparatorOptions& options) {
  const std::size_t dim = compute_meta(data).ambient_dim;
  DenseWeights w(dim);
  ComparatorResult best{w, comparator_objective(data, w, lambda, c_pos, c_neg)};
  std::vector<double> grad(dim);
  for (std::size_t k = 1; k <= options.epochs; ++k) {
    std::fill(grad.begin(), grad.end(), 0.0);
    for (const auto& ex : data) {
      const double cost = ex.y == Label::kPositive ? c_pos : c_neg;
      if (hinge_loss(dot(ex.x, w), ex.y, 1.0) > 0.0) {
        const double scale = -cost * to_double(ex.y);
        for (const auto& e : ex.x) grad[e.index] += scale * e.value;
      }
    }
    const auto wv = w.values();
    double norm = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
      if (wv[i] > 0.0) grad[i] += lambda;
      if (wv[i] < 0.0) grad[i] -= lambda;
      norm += grad[i] * grad[i];
    }
    norm = std::sqrt(norm);
    if (norm == 0.0) break;
    const double step = options.step0 / std::sqrt(static_cast<double>(k)) / norm;
    for (std::size_t i = 0; i < dim; ++i) wv[i] -= step * grad[i];
    const double obj = comparator_objective(data, w, lambda, c_pos, c_neg);
    if (obj < best.objective) best = {w, obj};
  }
  return best;
}

std::vector<double> fixed_losses(const Dataset& data, std::span<const std::size_t> order,
                                 const DenseWeights& w, double c_pos, double c_neg) {
  std::vector<double> out;
  out.reserve(order.size());
  for (std::size_t idx : order) {
    const auto& ex = data.at(idx);
    out.push_back(
        hinge_loss(dot(ex.x, w), ex.y, ex.y == Label::kPositive ? c_pos : c_neg));
  }
  return out;
}

RegretTrace regret_trace(std::span<const double> online_losses,
                         std::span<const double> comparator_losses,
                         std::span<const std::size_t> checkpoints) {
  if (online_losses.size() != comparator_losses.size()) {
    throw SpecError("regret_trace: loss series differ in length");
  }
  RegretTrace trace;
  trace.cumulative_online.reserve(online_losses.size());
  trace.cumulative_comparator.reserve(online_losses.size());
  double online = 0.0;
  double comparator = 0.0;
  for (std::size_t t = 0; t < online_losses.size(); ++t) {
    online += online_losses[t];
    comparator += comparator_losses[t];
    trace.cumulative_online.push_back(online);
    trace.cumulative_comparator.push_back(comparator);
  }
  for (std::size_t cp : checkpoints) {
    if (cp == 0 || cp > online_losses.size()) {
      throw SpecError("regret_trace: checkpoint " + std::to_string(cp) +
                      " outside 1.." + std::to_string(online_losses.size()));
    }
    trace.checkpoints.push_back(
        {cp, trace.cumulative_online[cp - 1] - trace.cumulative_comparator[cp - 1]});
  }
  return trace;
}

MeanStd mean_std(std::span<const double> values) {
  MeanStd out;
  if (values.empty()) return out;
  double sum = 0.0;
  for (double v : values) sum += v;
  out.mean = sum / static_cast<double>(values.size());
  if (values.size() > 1) {
    double sq = 0.0;
    for (double v : values) sq += (v - out.mean) * (v - out.mean);
    out.std = std::sqrt(sq / static_cast<double>(values.size() - 1));
  }
  return out;
}

SweepResult sparsity_sweep(const AlgorithmSpec& base, const Dataset& train_set,
                           const Dataset& test, const SweepOptions& options) {
  if (options.lambda_grid.empty()) throw SpecError("sparsity_sweep: empty lambda grid");
  if (options.seeds.empty()) throw SpecError("sparsity_sweep: no seeds");
  if (options.ambient_dim == 0) throw SpecError("sparsity_sweep: ambient_dim is 0");

  std::vector<double> grid = options.lambda_grid;
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  for (double lambda : grid) {
    AlgorithmSpec probe = base;
    probe.set_lambda(lambda);
    probe.validate();
  }

  struct Job {
    double lambda;
    std::uint64_t seed;
  };
  std::vector<Job> jobs;
  for (double lambda : grid) {
    for (std::uint64_t seed : options.seeds) jobs.push_back({lambda, seed});
  }
  std::vector<SweepCell> cells(jobs.size());
  parallel_for(jobs.size(), options.workers, [&](std::size_t j) {
    AlgorithmSpec spec = base;
    spec.set_lambda(jobs[j].lambda);
    auto model = make_model(spec, options.ambient_dim);
    const auto order = permuted_stream(train_set, jobs[j].seed, options.stream);
    const TrainStats stats = train(*model, train_set, order, options.train);
    const DenseWeights w = model->weights();
    const EvalResult eval = evaluate(w, test, options.imbalance);
    cells[j] = {jobs[j].lambda,
                jobs[j].seed,
                model_sparsity(w, options.ambient_dim),
                eval.metrics.error_rate,
                eval.metrics.weighted_sum,
                stats.seconds,
                stats.updates};
  });

  std::sort(cells.begin(), cells.end(), [](const SweepCell& a, const SweepCell& b) {
    return a.lambda != b.lambda ? a.lambda < b.lambda : a.seed < b.seed;
  });
  SweepResult result;
  result.cells = cells;
  for (double lambda : grid) {
    std::vector<double> sparsity;
    std::vector<double> error_rate;
    for (const auto& c : cells) {
      if (c.lambda != lambda) continue;
      sparsity.push_back(c.sparsity);
      error_rate.push_back(c.test_error);
    }
    const MeanStd s = mean_std(sparsity);
    const MeanStd e = mean_std(error_rate);
    result.points.push_back({lambda, s.mean, s.std, e.mean, e.std});
  }
  return result;
}

}  // namespace sol
