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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <string>

#include "sol/data_io.hpp"
#include "sol/error.hpp"
#include "sol/random.hpp"
#include "test_util.hpp"

namespace sol {
namespace {

TEST(ParseLine, Examples) {
  const auto a = parse_libsvm_line("+1 3:0.5 7:1.25");
  ASSERT_TRUE(a);
  EXPECT_EQ(a->y, Label::kPositive);
  EXPECT_EQ(a->x, SparseVector({{2, 0.5}, {6, 1.25}}));

  const auto b = parse_libsvm_line("-1");
  ASSERT_TRUE(b);
  EXPECT_EQ(b->y, Label::kNegative);
  EXPECT_TRUE(b->x.empty());
}

TEST(ParseLine, LabelForms) {
  EXPECT_EQ(parse_libsvm_line("1 1:1")->y, Label::kPositive);
  EXPECT_EQ(parse_libsvm_line("0 1:1")->y, Label::kNegative);
  EXPECT_EQ(parse_libsvm_line("+1")->y, Label::kPositive);
  EXPECT_EQ(parse_libsvm_line("-1.0")->y, Label::kNegative);
}

TEST(ParseLine, CommentsAndBlankLines) {
  EXPECT_FALSE(parse_libsvm_line(""));
  EXPECT_FALSE(parse_libsvm_line("   \t"));
  EXPECT_FALSE(parse_libsvm_line("# header"));
  const auto ex = parse_libsvm_line("-1 2:3 # trailing 9:9");
  ASSERT_TRUE(ex);
  EXPECT_EQ(ex->x, SparseVector({{1, 3.0}}));
  EXPECT_EQ(parse_libsvm_line("+1 1:2\r")->x, SparseVector({{0, 2.0}}));
}

TEST(ParseLine, MalformedPair) {
  EXPECT_THROW(parse_libsvm_line("1 a:b"), ParseError);
  EXPECT_THROW(parse_libsvm_line("1 3"), ParseError);
  EXPECT_THROW(parse_libsvm_line("1 3:"), ParseError);
  EXPECT_THROW(parse_libsvm_line("1 :3"), ParseError);
  EXPECT_THROW(parse_libsvm_line("1 3:1x"), ParseError);
  EXPECT_THROW(parse_libsvm_line("1 3:nan"), ParseError);
}

TEST(ParseLine, BadLabel) {
  EXPECT_THROW(parse_libsvm_line("yes 1:1"), ParseError);
  EXPECT_THROW(parse_libsvm_line("2 1:1"), ParseError);
  EXPECT_THROW(parse_libsvm_line("+-1 1:1"), ParseError);
}

TEST(ParseLine, NonIncreasingIndices) {
  EXPECT_THROW(parse_libsvm_line("1 3:1 2:1"), ParseError);
  EXPECT_THROW(parse_libsvm_line("1 3:1 3:1"), ParseError);
}

TEST(ParseLine, IndexBelowOne) {
  EXPECT_THROW(parse_libsvm_line("1 0:1"), ParseError);
  EXPECT_THROW(parse_libsvm_line("1 -2:1"), ParseError);
}

TEST(ParseLine, ErrorCarriesLineNumber) {
  try {
    parse_libsvm_line("1 a:b", 17);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line_number(), 17u);
    EXPECT_NE(std::string(e.what()).find("line 17"), std::string::npos);
  }
}

TEST(ParseLine, ExplicitZerosAreDropped) {
  EXPECT_EQ(parse_libsvm_line("1 1:0 2:4")->x, SparseVector({{1, 4.0}}));
}

TEST(Serialize, RoundTripIsExact) {
  std::mt19937_64 gen(71);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int k = 0; k < 1000; ++k) {
    SparseExample ex;
    ex.y = coin(gen) < 0.5 ? Label::kPositive : Label::kNegative;
    ex.x = testing::random_sparse(gen, 50, 0.2, std::pow(10.0, 6.0 * coin(gen) - 3.0));
    const auto line = serialize_libsvm_line(ex);
    const auto back = parse_libsvm_line(line);
    ASSERT_TRUE(back);
    EXPECT_EQ(*back, ex) << line;
    EXPECT_EQ(serialize_libsvm_line(*back), line);
  }
}

TEST(Serialize, CanonicalForm) {
  EXPECT_EQ(serialize_libsvm_line(*parse_libsvm_line("1 3:0.5 7:2")), "+1 3:0.5 7:2");
  EXPECT_EQ(serialize_libsvm_line(*parse_libsvm_line("0")), "-1");
}

TEST(ScanMeta, Examples) {
  testing::TempDir dir("meta");
  const auto two = dir.write("two.svm", "+1 1:1\n-1 2:1\n");
  const auto m = scan_meta(two);
  EXPECT_EQ(m.n_examples, 2u);
  EXPECT_EQ(m.ambient_dim, 2u);
  EXPECT_EQ(m.nnz, 2u);
  EXPECT_EQ(m.positives, 1u);
  EXPECT_EQ(m.negatives, 1u);

  const auto empty = scan_meta(dir.write("empty.svm", ""));
  EXPECT_EQ(empty.n_examples, 0u);
  EXPECT_EQ(empty.ambient_dim, 0u);

  const auto wide = scan_meta(dir.write("wide.svm", "+1 5:1 47152:0.25\n-1 9:2\n"));
  EXPECT_EQ(wide.ambient_dim, 47152u);
}

TEST(ScanMeta, PropagatesParseErrorsWithLineNumber) {
  testing::TempDir dir("meta_err");
  const auto p = dir.write("bad.svm", "+1 1:1\n\n-1 2:1 1:1\n");
  try {
    scan_meta(p);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line_number(), 3u);
  }
}

TEST(ReadWrite, FileRoundTrip) {
  testing::TempDir dir("rw");
  const auto data = testing::random_stream(73, 300, 40, 0.2);
  write_libsvm(dir.path() / "d.svm", data);
  EXPECT_EQ(read_libsvm(dir.path() / "d.svm"), data);
  EXPECT_EQ(scan_meta(dir.path() / "d.svm"), compute_meta(data));
}

TEST(ReadWrite, MissingFileIsDataError) {
  EXPECT_THROW(read_libsvm("/nonexistent/sol/none.svm"), DataError);
}

TEST(StreamLibsvm, PreservesOrderThroughSmallQueue) {
  testing::TempDir dir("stream");
  const auto data = testing::random_stream(79, 500, 20, 0.3);
  write_libsvm(dir.path() / "d.svm", data);
  Dataset seen;
  stream_libsvm(dir.path() / "d.svm", 3, [&](SparseExample&& ex) { seen.push_back(ex); });
  EXPECT_EQ(seen, data);
}

TEST(StreamLibsvm, SurfacesProducerErrors) {
  testing::TempDir dir("stream_err");
  const auto p = dir.write("bad.svm", "+1 1:1\n+1 1:1\n-1 q\n+1 1:1\n");
  std::size_t consumed = 0;
  EXPECT_THROW(stream_libsvm(p, 1, [&](SparseExample&&) { ++consumed; }), ParseError);
  EXPECT_LE(consumed, 2u);
}

TEST(StreamLibsvm, SurfacesConsumerErrors) {
  testing::TempDir dir("stream_cons");
  const auto data = testing::random_stream(83, 100, 5, 0.5);
  write_libsvm(dir.path() / "d.svm", data);
  EXPECT_THROW(stream_libsvm(dir.path() / "d.svm", 2,
                             [](SparseExample&&) { throw std::runtime_error("stop"); }),
               std::runtime_error);
}

TEST(Permutation, DeterministicAndComplete) {
  const auto a = permutation(100, 5);
  EXPECT_EQ(a, permutation(100, 5));
  std::vector<std::size_t> sorted = a;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < 100; ++i) EXPECT_EQ(sorted[i], i);
  EXPECT_EQ(permutation(1, 9), std::vector<std::size_t>{0});
  EXPECT_TRUE(permutation(0, 9).empty());
}

TEST(Permutation, DifferentSeedsDiffer) {
  const auto a = permutation(100, 1);
  EXPECT_TRUE(a != permutation(100, 2) || a != permutation(100, 3));
}

TEST(Permutation, PinnedSequence) {
  // Guards the portable generator against silent changes.
  Rng rng(42);
  const std::uint64_t first = rng.next_u64();
  EXPECT_EQ(first, std::mt19937_64(42)());
  Rng a(7), b(7);
  for (int k = 0; k < 100; ++k) {
    EXPECT_EQ(a.below(13), b.below(13));
    EXPECT_EQ(a.normal(0.0, 1.0), b.normal(0.0, 1.0));
  }
}

TEST(Rng, BelowIsInRangeAndRoughlyUniform) {
  Rng rng(3);
  std::vector<int> counts(6, 0);
  for (int k = 0; k < 60000; ++k) ++counts[rng.below(6)];
  for (int c : counts) EXPECT_NEAR(c, 10000, 500);
}

TEST(Rng, NormalMoments) {
  Rng rng(4);
  double s = 0.0, s2 = 0.0;
  const int n = 200000;
  for (int k = 0; k < n; ++k) {
    const double v = rng.normal(2.0, 3.0);
    s += v;
    s2 += v * v;
  }
  const double mean = s / n;
  EXPECT_NEAR(mean, 2.0, 5.0 * 3.0 / std::sqrt(n));
  EXPECT_NEAR(s2 / n - mean * mean, 9.0, 0.15);
}

TEST(PermutedStream, FallsBackToFileOrderOverBudget) {
  const auto data = testing::random_stream(89, 50, 10, 0.5);
  StreamOptions tiny;
  tiny.memory_budget_bytes = 16;
  const auto order = permuted_stream(data, 3, tiny);
  for (std::size_t i = 0; i < order.size(); ++i) EXPECT_EQ(order[i], i);
  EXPECT_EQ(permuted_stream(data, 3), permutation(50, 3));
}

SyntheticSpec small_spec(std::size_t n_train = 100) {
  SyntheticSpec s;
  s.n_train = n_train;
  s.n_test = 20;
  return s;
}

TEST(Synthetic, SupportSizeBound) {
  const auto d = generate_synthetic(small_spec());
  ASSERT_EQ(d.train.size(), 100u);
  ASSERT_EQ(d.test.size(), 20u);
  for (const auto& ex : d.train) {
    EXPECT_LE(ex.x.size(), 300u);
    EXPECT_LT(ex.x.required_dimension(), 1001u);
  }
}

TEST(Synthetic, NoiseStaysOutsideEffectiveBlock) {
  auto s = small_spec();
  s.ambient_dim = 60;
  s.n_effective = 10;
  s.n_noise = 7;
  const auto d = generate_synthetic(s);
  for (const auto& ex : d.train) {
    std::size_t noise = 0;
    for (const auto& e : ex.x) noise += e.index >= 10;
    EXPECT_EQ(noise, 7u);
  }
}

TEST(Synthetic, NoiselessLabelsFollowThePlane) {
  auto s = small_spec(500);
  s.n_noise = 0;
  s.noise_var = 0.0;
  const auto d = generate_synthetic(s);
  EXPECT_EQ(d.true_plane.dimension(), s.ambient_dim);
  for (std::size_t i = s.n_effective; i < s.ambient_dim; ++i) EXPECT_EQ(d.true_plane[i], 0.0);
  for (const auto& ex : d.train) EXPECT_EQ(ex.y, sign_label(dot(ex.x, d.true_plane)));
}

TEST(Synthetic, LabelsIgnoreNoise) {
  const auto d = generate_synthetic(small_spec(300));
  for (const auto& ex : d.train) EXPECT_EQ(ex.y, sign_label(dot(ex.x, d.true_plane)));
}

TEST(Synthetic, Deterministic) {
  const auto a = generate_synthetic(small_spec());
  const auto b = generate_synthetic(small_spec());
  EXPECT_EQ(a.train, b.train);
  EXPECT_EQ(a.test, b.test);
  auto other = small_spec();
  other.seed = 2;
  EXPECT_NE(generate_synthetic(other).train, a.train);
}

TEST(Synthetic, EffectiveMeansWithinFiveStandardErrors) {
  auto s = small_spec(10000);
  s.n_test = 1;
  const auto d = generate_synthetic(s);
  std::vector<double> sum(s.n_effective, 0.0), sum2(s.n_effective, 0.0);
  for (const auto& ex : d.train) {
    for (const auto& e : ex.x) {
      if (e.index < s.n_effective) {
        sum[e.index] += e.value;
        sum2[e.index] += e.value * e.value;
      }
    }
  }
  const double n = static_cast<double>(d.train.size());
  for (std::size_t i = 0; i < s.n_effective; ++i) {
    const double mean = sum[i] / n;
    const double var = sum2[i] / n - mean * mean;
    EXPECT_LE(std::abs(mean - d.true_plane[i]), 5.0 * std::sqrt(var / n)) << i;
    EXPECT_GE(var, 0.5 * 0.9);
    EXPECT_LE(var, 100.0 * 1.1);
  }
}

TEST(Synthetic, Validation) {
  auto s = small_spec();
  s.n_noise = 901;
  EXPECT_THROW(s.validate(), SpecError);
  EXPECT_THROW(generate_synthetic(s), SpecError);
  s = small_spec();
  s.var_range = {2.0, 1.0};
  EXPECT_THROW(s.validate(), SpecError);
  EXPECT_DOUBLE_EQ(small_spec().planted_sparsity(), 0.9);
}

TEST(Subsample, CountsAndMembership) {
  Dataset data;
  for (std::size_t k = 0; k < 1000; ++k) {
    data.push_back({k < 500 ? Label::kPositive : Label::kNegative,
                    SparseVector({{k, 1.0}})});
  }
  const auto sub = subsample_imbalanced(data, 1, 99, 7);
  ASSERT_EQ(sub.size(), 100u);
  const auto meta = compute_meta(sub);
  EXPECT_EQ(meta.positives, 1u);
  EXPECT_EQ(meta.negatives, 99u);
  std::set<std::size_t> seen;
  for (const auto& ex : sub) {
    const std::size_t k = ex.x.entries()[0].index;
    EXPECT_EQ(data[k], ex);
    EXPECT_TRUE(seen.insert(k).second);
  }
  EXPECT_EQ(subsample_imbalanced(data, 1, 99, 7), sub);
}

TEST(Subsample, ShortClassIsNamed) {
  Dataset data(10, {Label::kPositive, SparseVector({{0, 1.0}})});
  data.push_back({Label::kNegative, SparseVector({{1, 1.0}})});
  try {
    subsample_imbalanced(data, 11, 1, 1);
    FAIL();
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("positive"), std::string::npos);
  }
  try {
    subsample_imbalanced(data, 1, 2, 1);
    FAIL();
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("negative"), std::string::npos);
  }
}

}  // namespace
}  // namespace sol
