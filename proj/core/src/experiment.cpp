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

#include "sol/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <tuple>

#include "json.hpp"
#include "sol/error.hpp"
#include "sol/parallel.hpp"
#include "sol/random.hpp"

namespace sol {
namespace {

using nlohmann::json;

std::string fmt17(double v) {
  if (std::isnan(v)) return "";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json num_or_null(double v) { return std::isnan(v) ? json(nullptr) : json(v); }

std::string seed_field(const ReportRow& row) {
  return row.seed ? std::to_string(*row.seed) : row.aggregate;
}

// Aggregates sort after concrete seeds; "mean" before "std".
auto row_key(const ReportRow& row) {
  const int rank = row.seed ? 0 : (row.aggregate == "mean" ? 1 : 2);
  return std::make_tuple(row.algorithm, row.lambda, rank, row.seed.value_or(0));
}

// Output file, or stdout when path is empty.
class OutputSink {
 public:
  explicit OutputSink(const std::filesystem::path& path) {
    if (path.empty()) return;
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    file_.open(path);
    if (!file_) throw DataError("cannot write " + path.string());
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
  void finish(const std::filesystem::path& path) {
    stream().flush();
    if (!stream()) throw DataError("write failed for " + path.string());
  }

 private:
  std::ofstream file_;
};

ReportRow make_row(const AlgorithmSpec& algo, std::uint64_t seed, double sparsity,
                   const Metrics& m, double seconds, std::size_t updates) {
  ReportRow row;
  row.algorithm = algo.name();
  row.lambda = algo.lambda();
  row.eta = algo.eta();
  row.r = algo.r();
  row.c_pos = algo.c_pos();
  row.c_neg = algo.c_neg();
  row.seed = seed;
  row.achieved_sparsity = sparsity;
  row.test_error = m.error_rate;
  row.weighted_sum = m.weighted_sum;
  row.train_time_seconds = seconds;
  row.updates_count = static_cast<double>(updates);
  return row;
}

// Held-out score for one fold; higher is better for weighted_sum.
double fold_score(const Metrics& m, bool weighted) {
  if (!weighted) return m.error_rate;
  // A fold missing one class has no weighted sum; fall back to accuracy.
  return m.weighted_sum.value_or(1.0 - m.error_rate);
}

}  // namespace

std::vector<double> power_of_two_grid(int lo, int hi) {
  std::vector<double> grid;
  for (int e = lo; e <= hi; ++e) grid.push_back(std::ldexp(1.0, e));
  return grid;
}

std::vector<std::uint64_t> ExperimentSpec::seed_list() const {
  std::vector<std::uint64_t> out;
  for (std::size_t k = 0; k < seeds; ++k) out.push_back(base_seed + k);
  return out;
}

void ExperimentSpec::validate() const {
  if (algorithms.empty() && task != Task::kSynthGen) {
    throw SpecError("no algorithm given");
  }
  for (const auto& a : algorithms) a.validate();
  if (seeds < 1) throw SpecError("seeds must be at least 1");
  if (task == Task::kGridSearch && folds < 2) {
    throw SpecError("grid search needs at least 2 folds");
  }
  if (passes < 1) throw SpecError("passes must be at least 1");
  if (lambda_grid.empty()) throw SpecError("lambda grid is empty");
  for (double l : lambda_grid) {
    if (!(l >= 0.0) || !std::isfinite(l)) throw SpecError("lambda values must be >= 0");
  }
  if (eta_grid.empty() || secondary_grid.empty()) throw SpecError("empty search grid");
  if (!synthetic && !train_path) throw SpecError("no training data (--train or --synth)");
  if (synthetic) synthetic->validate();
  const bool needs_test = task == Task::kTrainEval || task == Task::kSparsitySweep;
  if (needs_test && !synthetic && !test_path) throw SpecError("no test data (--test)");
  if (task == Task::kSynthGen && (!synthetic || output.empty())) {
    throw SpecError("synth needs a synthetic spec and an output directory");
  }
  if (task == Task::kRegret && checkpoints.empty()) {
    throw SpecError("regret needs at least one checkpoint");
  }
  imbalance.validate();
}

std::vector<ReportRow> with_summaries(std::vector<ReportRow> rows) {
  std::erase_if(rows, [](const ReportRow& r) { return !r.seed; });
  std::sort(rows.begin(), rows.end(),
            [](const ReportRow& a, const ReportRow& b) { return row_key(a) < row_key(b); });
  std::vector<ReportRow> out;
  std::size_t begin = 0;
  while (begin < rows.size()) {
    std::size_t end = begin;
    while (end < rows.size() && rows[end].algorithm == rows[begin].algorithm &&
           rows[end].lambda == rows[begin].lambda) {
      ++end;
    }
    std::vector<double> sparsity, error, wsum, time, updates;
    bool all_wsum = true;
    for (std::size_t k = begin; k < end; ++k) {
      const ReportRow& r = rows[k];
      out.push_back(r);
      sparsity.push_back(r.achieved_sparsity);
      error.push_back(r.test_error);
      time.push_back(r.train_time_seconds);
      updates.push_back(r.updates_count);
      if (r.weighted_sum) {
        wsum.push_back(*r.weighted_sum);
      } else {
        all_wsum = false;
      }
    }
    const MeanStd s = mean_std(sparsity), e = mean_std(error), t = mean_std(time),
                  u = mean_std(updates), w = mean_std(wsum);
    ReportRow mean = rows[begin];
    mean.seed.reset();
    ReportRow std = mean;
    mean.aggregate = "mean";
    std.aggregate = "std";
    mean.achieved_sparsity = s.mean;
    std.achieved_sparsity = s.std;
    mean.test_error = e.mean;
    std.test_error = e.std;
    mean.train_time_seconds = t.mean;
    std.train_time_seconds = t.std;
    mean.updates_count = u.mean;
    std.updates_count = u.std;
    mean.weighted_sum = all_wsum ? std::optional<double>(w.mean) : std::nullopt;
    std.weighted_sum = all_wsum ? std::optional<double>(w.std) : std::nullopt;
    out.push_back(mean);
    out.push_back(std);
    begin = end;
  }
  return out;
}

void write_csv(std::ostream& out, const std::vector<ReportRow>& rows, bool deterministic) {
  out << "algorithm,lambda,eta,r,c_pos,c_neg,seed,achieved_sparsity,test_error,"
         "weighted_sum";
  if (!deterministic) out << ",train_time_seconds";
  out << ",updates_count\n";
  for (const auto& r : rows) {
    out << r.algorithm << ',' << fmt17(r.lambda) << ',' << fmt17(r.eta) << ','
        << fmt17(r.r) << ',' << fmt17(r.c_pos) << ',' << fmt17(r.c_neg) << ','
        << seed_field(r) << ',' << fmt17(r.achieved_sparsity) << ','
        << fmt17(r.test_error) << ','
        << (r.weighted_sum ? fmt17(*r.weighted_sum) : std::string());
    if (!deterministic) out << ',' << fmt17(r.train_time_seconds);
    out << ',' << fmt17(r.updates_count) << '\n';
  }
}

void write_json(std::ostream& out, const std::vector<ReportRow>& rows, bool deterministic) {
  json arr = json::array();
  for (const auto& r : rows) {
    json j = {{"algorithm", r.algorithm},
              {"lambda", r.lambda},
              {"eta", r.eta},
              {"r", num_or_null(r.r)},
              {"c_pos", r.c_pos},
              {"c_neg", r.c_neg},
              {"seed", r.seed ? json(*r.seed) : json(r.aggregate)},
              {"achieved_sparsity", r.achieved_sparsity},
              {"test_error", r.test_error},
              {"weighted_sum", r.weighted_sum ? json(*r.weighted_sum) : json(nullptr)},
              {"updates_count", r.updates_count}};
    if (!deterministic) j["train_time_seconds"] = r.train_time_seconds;
    arr.push_back(std::move(j));
  }
  out << json{{"rows", arr}}.dump(2) << '\n';
}

std::vector<std::size_t> fold_assignment(std::size_t n, std::size_t folds,
                                         std::uint64_t seed) {
  if (folds == 0) throw SpecError("folds must be positive");
  const auto perm = permutation(n, seed);
  std::vector<std::size_t> fold(n);
  for (std::size_t k = 0; k < n; ++k) fold[perm[k]] = k % folds;
  return fold;
}

GridSearchResult grid_search(const AlgorithmSpec& algorithm, const Dataset& train_set,
                             const ExperimentSpec& spec) {
  if (train_set.empty()) throw DataError("grid search: empty training set");
  if (spec.folds < 2) throw SpecError("grid search needs at least 2 folds");
  const bool weighted = algorithm.cost_sensitive();
  const std::size_t dim = compute_meta(train_set).ambient_dim;

  // Folds keep the permuted visiting order of the shared permutation.
  const auto perm = permutation(train_set.size(), spec.base_seed);
  const auto fold = fold_assignment(train_set.size(), spec.folds, spec.base_seed);
  std::vector<std::vector<std::size_t>> train_order(spec.folds);
  std::vector<Dataset> held_out(spec.folds);
  for (std::size_t idx : perm) {
    for (std::size_t f = 0; f < spec.folds; ++f) {
      if (fold[idx] == f) {
        held_out[f].push_back(train_set[idx]);
      } else {
        train_order[f].push_back(idx);
      }
    }
  }

  const std::vector<double> etas =
      algorithm.has_learning_rate() ? spec.eta_grid : std::vector<double>{algorithm.eta()};
  std::vector<std::optional<double>> secondaries;
  if (algorithm.has_secondary()) {
    for (double s : spec.secondary_grid) secondaries.emplace_back(s);
  } else {
    secondaries.emplace_back(std::nullopt);
  }
  std::vector<double> sorted_etas = etas;
  std::sort(sorted_etas.begin(), sorted_etas.end());
  std::sort(secondaries.begin(), secondaries.end());

  GridSearchResult result;
  result.metric = weighted ? "weighted_sum" : "error_rate";
  for (double eta : sorted_etas) {
    for (const auto& sec : secondaries) result.table.push_back({eta, sec, 0.0});
  }

  auto configured = [&](const GridCell& cell) {
    AlgorithmSpec a = algorithm;
    a.set_lambda(0.0);
    a.set_eta(cell.eta);
    if (cell.secondary) a.set_secondary(*cell.secondary);
    a.validate();
    return a;
  };

  parallel_for(result.table.size(), spec.workers, [&](std::size_t k) {
    GridCell& cell = result.table[k];
    const AlgorithmSpec a = configured(cell);
    double total = 0.0;
    TrainOptions opts;
    opts.passes = spec.passes;
    for (std::size_t f = 0; f < spec.folds; ++f) {
      auto model = make_model(a, dim);
      train(*model, train_set, train_order[f], opts);
      const EvalResult eval = evaluate(*model, held_out[f], spec.imbalance);
      total += fold_score(eval.metrics, weighted);
    }
    cell.score = total / static_cast<double>(spec.folds);
  });

  std::size_t best = 0;
  for (std::size_t k = 1; k < result.table.size(); ++k) {
    const double s = result.table[k].score;
    const double b = result.table[best].score;
    if (weighted ? s > b : s < b) best = k;
  }
  result.best_index = best;
  result.best = configured(result.table[best]);
  result.best_score = result.table[best].score;
  return result;
}

std::vector<RegretRow> regret_experiment(const AlgorithmSpec& algorithm,
                                         const Dataset& train_set, std::uint64_t seed,
                                         const std::vector<std::size_t>& checkpoints,
                                         const ComparatorOptions& comparator) {
  const std::size_t horizon =
      checkpoints.empty() ? train_set.size()
                          : *std::max_element(checkpoints.begin(), checkpoints.end());
  if (horizon > train_set.size()) {
    throw SpecError("checkpoint " + std::to_string(horizon) + " exceeds the " +
                    std::to_string(train_set.size()) + " available examples");
  }
  auto order = permutation(train_set.size(), seed);
  order.resize(horizon);
  Dataset stream;
  stream.reserve(horizon);
  for (std::size_t idx : order) stream.push_back(train_set[idx]);

  auto model = make_model(algorithm, compute_meta(stream).ambient_dim);
  TrainOptions opts;
  opts.record_losses = true;
  std::vector<std::size_t> identity(horizon);
  for (std::size_t k = 0; k < horizon; ++k) identity[k] = k;
  const TrainStats stats = train(*model, stream, identity, opts);

  // R_T compares against the best fixed weights for the first T rounds, so
  // each checkpoint gets its own comparator.
  std::vector<double> cumulative(horizon);
  double acc = 0.0;
  for (std::size_t k = 0; k < horizon; ++k) cumulative[k] = acc += stats.losses[k];

  std::vector<std::size_t> sorted = checkpoints;
  if (sorted.empty()) sorted.push_back(horizon);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  std::vector<RegretRow> rows;
  for (std::size_t t : sorted) {
    if (t == 0) throw SpecError("checkpoints must be positive");
    const Dataset prefix(stream.begin(), stream.begin() + static_cast<std::ptrdiff_t>(t));
    const ComparatorResult best =
        offline_comparator(prefix, 0.0, algorithm.c_pos(), algorithm.c_neg(), comparator);
    const double online = cumulative[t - 1];
    const double regret = online - best.objective;
    rows.push_back({algorithm.name(), seed, t, online, best.objective, regret,
                    regret / static_cast<double>(t)});
  }
  return rows;
}

SyntheticSpec synthetic_spec_from_json(const std::string& text) {
  SyntheticSpec spec;
  try {
    const json j = json::parse(text);
    auto get_size = [&](const char* key, std::size_t& field) {
      if (j.contains(key)) field = j.at(key).get<std::size_t>();
    };
    auto get_range = [&](const char* key, Interval& field) {
      if (j.contains(key)) {
        const auto& v = j.at(key);
        if (!v.is_array() || v.size() != 2) {
          throw SpecError(std::string(key) + " must be a [lo, hi] pair");
        }
        field = {v[0].get<double>(), v[1].get<double>()};
      }
    };
    get_size("n_train", spec.n_train);
    get_size("n_test", spec.n_test);
    get_size("ambient_dim", spec.ambient_dim);
    get_size("n_effective", spec.n_effective);
    get_size("n_noise", spec.n_noise);
    get_range("mean_range", spec.mean_range);
    get_range("var_range", spec.var_range);
    if (j.contains("noise_var")) spec.noise_var = j.at("noise_var").get<double>();
    if (j.contains("seed")) spec.seed = j.at("seed").get<std::uint64_t>();
  } catch (const json::exception& e) {
    throw SpecError(std::string("synthetic spec: ") + e.what());
  }
  spec.validate();
  return spec;
}

std::string synthetic_spec_to_json(const SyntheticSpec& spec) {
  const json j = {{"n_train", spec.n_train},
                  {"n_test", spec.n_test},
                  {"ambient_dim", spec.ambient_dim},
                  {"n_effective", spec.n_effective},
                  {"n_noise", spec.n_noise},
                  {"mean_range", {spec.mean_range.lo, spec.mean_range.hi}},
                  {"var_range", {spec.var_range.lo, spec.var_range.hi}},
                  {"noise_var", spec.noise_var},
                  {"seed", spec.seed}};
  return j.dump(2);
}

LoadedData load_data(const ExperimentSpec& spec) {
  LoadedData data;
  if (spec.synthetic) {
    SyntheticData synth = generate_synthetic(*spec.synthetic);
    data.train = std::move(synth.train);
    data.test = std::move(synth.test);
    data.ambient_dim = spec.synthetic->ambient_dim;
  } else {
    data.train = read_libsvm(*spec.train_path);
    if (spec.test_path) data.test = read_libsvm(*spec.test_path);
  }
  if (spec.train_subsample) {
    data.train = subsample_imbalanced(data.train, spec.train_subsample->positives,
                                      spec.train_subsample->negatives, spec.base_seed);
  }
  if (spec.test_subsample) {
    data.test = subsample_imbalanced(data.test, spec.test_subsample->positives,
                                     spec.test_subsample->negatives, spec.base_seed + 1);
  }
  data.ambient_dim = std::max({data.ambient_dim, compute_meta(data.train).ambient_dim,
                               compute_meta(data.test).ambient_dim});
  return data;
}

namespace {

std::vector<AlgorithmSpec> resolve_costs(const ExperimentSpec& spec, const Dataset& train_set) {
  std::vector<AlgorithmSpec> algos = spec.algorithms;
  if (!spec.rho_from_train_priors) return algos;
  const DatasetMeta meta = compute_meta(train_set);
  ImbalanceSpec priors = spec.imbalance;
  priors.t_pos = meta.positives;
  priors.t_neg = meta.negatives;
  const double rho = rho_from_priors(priors);
  for (auto& a : algos) {
    if (a.cost_sensitive()) a.set_costs(rho, 1.0);
  }
  return algos;
}

void write_rows(const ExperimentSpec& spec, const std::vector<ReportRow>& rows) {
  OutputSink sink(spec.output);
  const auto all = with_summaries(rows);
  if (spec.format == OutputFormat::kJson) {
    write_json(sink.stream(), all, spec.deterministic);
  } else {
    write_csv(sink.stream(), all, spec.deterministic);
  }
  sink.finish(spec.output);
}

void run_train_eval(const ExperimentSpec& spec, const LoadedData& data) {
  std::vector<ReportRow> rows;
  TrainOptions opts;
  opts.passes = spec.passes;
  for (const auto& algo : resolve_costs(spec, data.train)) {
    for (double lambda : spec.lambda_grid) {
      AlgorithmSpec a = algo;
      a.set_lambda(lambda);
      for (std::uint64_t seed : spec.seed_list()) {
        auto model = make_model(a, data.ambient_dim);
        const auto order = permuted_stream(data.train, seed, spec.stream);
        const TrainStats stats = train(*model, data.train, order, opts);
        const DenseWeights w = model->weights();
        const EvalResult eval = evaluate(w, data.test, spec.imbalance);
        rows.push_back(make_row(a, seed, model_sparsity(w, data.ambient_dim),
                                eval.metrics, stats.seconds, stats.updates));
      }
    }
  }
  write_rows(spec, rows);
}

void run_sweep(const ExperimentSpec& spec, const LoadedData& data) {
  std::vector<ReportRow> rows;
  SweepOptions opts;
  opts.lambda_grid = spec.lambda_grid;
  opts.seeds = spec.seed_list();
  opts.ambient_dim = data.ambient_dim;
  opts.workers = spec.workers;
  opts.imbalance = spec.imbalance;
  opts.train.passes = spec.passes;
  opts.stream = spec.stream;
  for (const auto& algo : resolve_costs(spec, data.train)) {
    const SweepResult sweep = sparsity_sweep(algo, data.train, data.test, opts);
    for (const auto& cell : sweep.cells) {
      AlgorithmSpec a = algo;
      a.set_lambda(cell.lambda);
      Metrics m;
      m.error_rate = cell.test_error;
      m.weighted_sum = cell.weighted_sum;
      rows.push_back(
          make_row(a, cell.seed, cell.sparsity, m, cell.train_seconds, cell.updates));
    }
  }
  write_rows(spec, rows);
}

void run_grid_search(const ExperimentSpec& spec, const LoadedData& data) {
  OutputSink sink(spec.output);
  json results = json::array();
  std::vector<std::pair<std::string, GridSearchResult>> all;
  for (const auto& algo : resolve_costs(spec, data.train)) {
    all.emplace_back(algo.name(), grid_search(algo, data.train, spec));
  }
  std::sort(all.begin(), all.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::ostream& out = sink.stream();
  if (spec.format == OutputFormat::kCsv) {
    out << "algorithm,eta,secondary,metric,cv_score,selected\n";
  }
  for (const auto& [name, res] : all) {
    json table = json::array();
    for (std::size_t k = 0; k < res.table.size(); ++k) {
      const GridCell& cell = res.table[k];
      const bool selected = k == res.best_index;
      if (spec.format == OutputFormat::kCsv) {
        out << name << ',' << fmt17(cell.eta) << ','
            << (cell.secondary ? fmt17(*cell.secondary) : std::string()) << ','
            << res.metric << ',' << fmt17(cell.score) << ',' << (selected ? 1 : 0)
            << '\n';
      }
      table.push_back({{"eta", cell.eta},
                       {"secondary", cell.secondary ? json(*cell.secondary) : json(nullptr)},
                       {"cv_score", cell.score},
                       {"selected", selected}});
    }
    results.push_back({{"algorithm", name},
                       {"metric", res.metric},
                       {"best_eta", res.best.eta()},
                       {"best_score", res.best_score},
                       {"table", table}});
  }
  if (spec.format == OutputFormat::kJson) out << json{{"grid_search", results}}.dump(2) << '\n';
  sink.finish(spec.output);
}

void run_regret(const ExperimentSpec& spec, const LoadedData& data) {
  std::vector<RegretRow> rows;
  for (const auto& algo : resolve_costs(spec, data.train)) {
    for (std::uint64_t seed : spec.seed_list()) {
      auto part = regret_experiment(algo, data.train, seed, spec.checkpoints);
      rows.insert(rows.end(), part.begin(), part.end());
    }
  }
  std::sort(rows.begin(), rows.end(), [](const RegretRow& a, const RegretRow& b) {
    return std::tie(a.algorithm, a.seed, a.t) < std::tie(b.algorithm, b.seed, b.t);
  });
  OutputSink sink(spec.output);
  std::ostream& out = sink.stream();
  if (spec.format == OutputFormat::kCsv) {
    out << "algorithm,seed,t,online_loss,comparator_loss,regret,regret_per_round\n";
    for (const auto& r : rows) {
      out << r.algorithm << ',' << r.seed << ',' << r.t << ',' << fmt17(r.online_loss)
          << ',' << fmt17(r.comparator_loss) << ',' << fmt17(r.regret) << ','
          << fmt17(r.regret_per_round) << '\n';
    }
  } else {
    json arr = json::array();
    for (const auto& r : rows) {
      arr.push_back({{"algorithm", r.algorithm},
                     {"seed", r.seed},
                     {"t", r.t},
                     {"online_loss", r.online_loss},
                     {"comparator_loss", r.comparator_loss},
                     {"regret", r.regret},
                     {"regret_per_round", r.regret_per_round}});
    }
    out << json{{"regret", arr}}.dump(2) << '\n';
  }
  sink.finish(spec.output);
}

json meta_json(const DatasetMeta& m) {
  return {{"n_examples", m.n_examples}, {"ambient_dim", m.ambient_dim},
          {"nnz", m.nnz},               {"positives", m.positives},
          {"negatives", m.negatives}};
}

void run_synth(const ExperimentSpec& spec) {
  const SyntheticData data = generate_synthetic(*spec.synthetic);
  std::filesystem::create_directories(spec.output);
  write_libsvm(spec.output / "train.svm", data.train);
  write_libsvm(spec.output / "test.svm", data.test);
  const json meta = {{"spec", json::parse(synthetic_spec_to_json(*spec.synthetic))},
                     {"planted_sparsity", spec.synthetic->planted_sparsity()},
                     {"train", meta_json(compute_meta(data.train))},
                     {"test", meta_json(compute_meta(data.test))},
                     {"true_plane", std::vector<double>(data.true_plane.values().begin(),
                                                        data.true_plane.values().end())}};
  std::ofstream out(spec.output / "meta.json");
  out << meta.dump(2) << '\n';
  if (!out) throw DataError("cannot write " + (spec.output / "meta.json").string());
}

}  // namespace

void run_experiment(const ExperimentSpec& spec) {
  spec.validate();
  if (spec.task == Task::kSynthGen) {
    run_synth(spec);
    return;
  }
  const LoadedData data = load_data(spec);
  if (data.train.empty()) throw DataError("training set is empty");
  switch (spec.task) {
    case Task::kTrainEval:
      if (data.test.empty()) throw DataError("test set is empty");
      run_train_eval(spec, data);
      break;
    case Task::kSparsitySweep:
      if (data.test.empty()) throw DataError("test set is empty");
      run_sweep(spec, data);
      break;
    case Task::kGridSearch:
      run_grid_search(spec, data);
      break;
    case Task::kRegret:
      run_regret(spec, data);
      break;
    case Task::kSynthGen:
      break;
  }
}

}  // namespace sol
