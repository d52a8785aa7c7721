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

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>

namespace {

namespace fs = std::filesystem;

const fs::path kWork = SOL_TEST_WORK_DIR;

int run(const std::string& args) {
  const std::string cmd = std::string("\"") + SOL_BENCH_PATH + "\" " + args + " 2>" +
                          (kWork / "stderr.txt").string() + " >" +
                          (kWork / "stdout.txt").string();
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

fs::path write(const std::string& name, const std::string& content) {
  const auto p = kWork / name;
  std::ofstream(p) << content;
  return p;
}

class Cli : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    fs::create_directories(kWork);
    write("synth.json",
          R"({"n_train": 400, "n_test": 200, "ambient_dim": 50, "n_effective": 5,)"
          R"( "n_noise": 10, "seed": 3})");
    ASSERT_EQ(run("synth --spec " + (kWork / "synth.json").string() + " --out " +
                  (kWork / "data").string()),
              0);
  }
  static std::string train_file() { return (kWork / "data" / "train.svm").string(); }
  static std::string test_file() { return (kWork / "data" / "test.svm").string(); }
};

TEST_F(Cli, SynthWritesDataAndMeta) {
  EXPECT_TRUE(fs::exists(kWork / "data" / "train.svm"));
  EXPECT_TRUE(fs::exists(kWork / "data" / "test.svm"));
  EXPECT_NE(slurp(kWork / "data" / "meta.json").find("\"ambient_dim\": 50"), std::string::npos);
}

TEST_F(Cli, TrainReportsCsvToStdout) {
  ASSERT_EQ(run("train --algo fsol --train " + train_file() + " --test " + test_file() +
                " --eta 0.5 --lambda 0.01 --seed 2 --deterministic"),
            0)
      << slurp(kWork / "stderr.txt");
  const auto out = slurp(kWork / "stdout.txt");
  EXPECT_EQ(out.rfind("algorithm,lambda,eta,r,c_pos,c_neg,seed,", 0), 0u);
  EXPECT_NE(out.find("\nfsol,0.01,0.5,,1,1,2,"), std::string::npos) << out;
}

TEST_F(Cli, TrainAcceptsSecondOrderOptions) {
  EXPECT_EQ(run("train --algo ssol-diag,cs-ssol --train " + train_file() + " --test " +
                test_file() + " --r 2 --cpos 3 --schedule const --passes 2 --format json"),
            2);  // ssol-diag is not cost-sensitive, so --cpos is rejected
  ASSERT_EQ(run("train --algo cs-ssol,cs-ssol-diag --train " + train_file() + " --test " +
                test_file() + " --r 2 --cpos 3 --schedule const --passes 2 --format json"),
            0)
      << slurp(kWork / "stderr.txt");
  EXPECT_NE(slurp(kWork / "stdout.txt").find("\"algorithm\": \"cs-ssol\""), std::string::npos);
}

TEST_F(Cli, DeterministicSweepIsByteIdentical) {
  const std::string args = "sweep --algo fsol,ssol-diag --synth " +
                           (kWork / "synth.json").string() +
                           " --lambda-grid 0,0.05,0.5 --seeds 3 --workers 2 --deterministic -o ";
  ASSERT_EQ(run(args + (kWork / "s1.csv").string()), 0) << slurp(kWork / "stderr.txt");
  ASSERT_EQ(run(args + (kWork / "s2.csv").string()), 0);
  const auto a = slurp(kWork / "s1.csv");
  EXPECT_FALSE(a.empty());
  EXPECT_EQ(a, slurp(kWork / "s2.csv"));
  EXPECT_EQ(a.find("train_time_seconds"), std::string::npos);
}

TEST_F(Cli, GridSearchAndRegret) {
  ASSERT_EQ(run("grid-search --algo fsol --train " + train_file() +
                " --eta-grid 0.5,1,2 --folds 3"),
            0)
      << slurp(kWork / "stderr.txt");
  const auto grid = slurp(kWork / "stdout.txt");
  EXPECT_EQ(grid.rfind("algorithm,eta,secondary,metric,cv_score,selected\n", 0), 0u);

  ASSERT_EQ(run("regret --algo ssol-diag --train " + train_file() +
                " --checkpoints 100,200,400"),
            0)
      << slurp(kWork / "stderr.txt");
  const auto regret = slurp(kWork / "stdout.txt");
  EXPECT_NE(regret.find("ssol-diag,1,400,"), std::string::npos);
}

TEST_F(Cli, ImbalancedSubsampleWithPriors) {
  ASSERT_EQ(run("train --algo cs-fsol --train " + train_file() + " --test " + test_file() +
                " --train-subsample 10:100 --test-subsample 5:50 --rho-from-priors"),
            0)
      << slurp(kWork / "stderr.txt");
  EXPECT_NE(slurp(kWork / "stdout.txt").find("cs-fsol,0,1,,10,1,"), std::string::npos);
}

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(run("train --algo sgd --train " + train_file() + " --test " + test_file()), 2);
  EXPECT_EQ(run("train --algo fsol --train " + train_file()), 2);
  EXPECT_EQ(run("train --algo fsol --train " + train_file() + " --test " + test_file() +
                " --schedule weekly"),
            2);
  EXPECT_EQ(run("train --algo fsol --eta -1 --train " + train_file() + " --test " +
                test_file()),
            2);
  EXPECT_EQ(run("frobnicate"), 2);
  EXPECT_EQ(run("train --algo fsol --train /nonexistent.svm --test " + test_file()), 3);
  const auto bad = write("bad.svm", "+1 1:1\n-1 3:1 2:1\n");
  EXPECT_EQ(run("train --algo fsol --train " + bad.string() + " --test " + test_file()), 3);
  EXPECT_NE(slurp(kWork / "stderr.txt").find("line 2"), std::string::npos);
  const auto huge = write("huge.svm", "+1 1:1e308\n+1 1:1e308\n");
  EXPECT_EQ(run("train --algo fsol --eta 512 --train " + huge.string() + " --test " +
                huge.string()),
            4);
  EXPECT_EQ(run("train --algo fsol --train " + train_file() + " --test " + test_file() +
                " --train-subsample 100000:1"),
            3);
}

}  // namespace
