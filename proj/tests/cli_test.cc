// Copyright 2026 The xaieval Authors.
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

#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "cli.h"
#include "cli_harness.h"

namespace xaieval {
namespace {

using testing::run_cli;

const std::string kData = XAIEVAL_TEST_DATA_DIR;
const std::string kFx = kData + "/fixture/";

TEST(Cli, EveryRunPrintsVersionAndDigest) {
  const auto r = run_cli({"verify-paper"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_EQ(r.err.rfind("xaieval 0.1.0 config_digest=", 0), 0u) << r.err;
}

TEST(Cli, VerifyPaperReportsMatches) {
  const auto r = run_cli({"verify-paper"});
  ASSERT_EQ(r.code, cli::kExitOk);
  EXPECT_NE(r.err.find("required cells 7/7 match"), std::string::npos) << r.err;
  EXPECT_NE(r.out.find("IMDB,TinyBERT,LIME,0.88620,0.8862,0.00000,match,yes"),
            std::string::npos);
  EXPECT_NE(r.out.find("IMDB,TinyBERT,Integrated Gradients,0.62225,0.6982,0.07595,mismatch,no"),
            std::string::npos);
}

TEST(Cli, BadWeightsAreAUsageError) {
  const auto r = run_cli({"cws", "--weights", "0.3,0.3,0.3,0.2", "-i",
                          kData + "/golden/ha.jsonl"});
  EXPECT_EQ(r.code, cli::kExitUsage);
  EXPECT_NE(r.err.find("weights must sum to 1"), std::string::npos) << r.err;
}

TEST(Cli, UnknownSubcommandAndMissingInputAreUsageErrors) {
  EXPECT_EQ(run_cli({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"ha"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({}).code, cli::kExitUsage);
}

TEST(Cli, HaOnBundledFixture) {
  const auto r = run_cli({"ha", "--explanations", kFx + "explanations.jsonl",
                          "--annotations", kFx + "annotations.jsonl"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_NE(r.err.find("ha toy tinybert LIME: 0.5185 (n=3)"), std::string::npos)
      << r.err;
}

TEST(Cli, ValidationErrorsExitOne) {
  const auto r = run_cli({"validate", "-i", kFx + "pairs.jsonl"});
  EXPECT_EQ(r.code, cli::kExitDataError);
  EXPECT_NE(r.out.find("DanglingReference"), std::string::npos) << r.out;
  const auto lenient =
      run_cli({"validate", "--lenient", "-i", kFx + "pairs.jsonl"});
  EXPECT_EQ(lenient.code, cli::kExitOk) << lenient.out;
}

TEST(Cli, MissingFileIsADataError) {
  const auto r = run_cli({"ha", "-i", kFx + "no_such_file.jsonl"});
  EXPECT_NE(r.code, cli::kExitOk);
}

TEST(Cli, GoldenOutputs) {
  for (const auto& c : testing::golden_cases(kData)) {
    const auto r = run_cli(c.args);
    ASSERT_EQ(r.code, cli::kExitOk) << c.golden << "\n" << r.err;
    EXPECT_EQ(r.out, testing::read_text(kData + "/golden/" + c.golden))
        << c.golden;
  }
}

TEST(Cli, JobsDoNotChangeOutputs) {
  for (const auto& c : testing::golden_cases(kData)) {
    auto one = c.args;
    one.insert(one.end(), {"--jobs", "1"});
    auto eight = c.args;
    eight.insert(eight.end(), {"--jobs", "8"});
    const auto a = run_cli(one);
    const auto b = run_cli(eight);
    const auto b2 = run_cli(eight);
    EXPECT_EQ(a.code, b.code) << c.golden;
    EXPECT_EQ(a.out, b.out) << c.golden;
    EXPECT_EQ(a.err, b.err) << c.golden;
    EXPECT_EQ(b.out, b2.out) << c.golden;
  }
}

}  // namespace
}  // namespace xaieval
