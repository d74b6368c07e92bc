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

#include "xaieval/contrastivity.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "builders.h"
#include "oracles.h"
#include "xaieval/error.h"

namespace xaieval {
namespace {

// Builds a pair whose explanations already are the given distributions.
ClassContrastPair make_contrast(std::string instance, std::vector<double> p,
                                std::vector<double> q) {
  std::vector<std::string> tokens;
  for (std::size_t i = 0; i < p.size(); ++i) tokens.push_back("t" + std::to_string(i));
  ClassContrastPair pair{"d", instance, "m", "lime", {}, {}};
  pair.explanation_p = testing::make_record(instance, tokens, std::move(p), "pos");
  pair.explanation_q = testing::make_record(instance, tokens, std::move(q), "neg");
  return pair;
}

TEST(ToDistribution, Examples) {
  const std::vector<double> ones{1, 1}, zeros{0, 0}, mixed{3, -1};
  EXPECT_EQ(to_distribution(ones, 1e-9), (std::vector<double>{0.5, 0.5}));
  EXPECT_EQ(to_distribution(zeros, 1e-9), (std::vector<double>{0.5, 0.5}));
  EXPECT_EQ(to_distribution(mixed, 0.0), (std::vector<double>{0.75, 0.25}));
  const auto tiny = to_distribution(mixed, 1e-9);
  EXPECT_NEAR(tiny[0], 0.75, 1e-9);
}

TEST(ToDistribution, RejectsNegativeEpsilonAndEmptyInput) {
  const std::vector<double> ones{1, 1}, none;
  try {
    to_distribution(ones, -1.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
  }
  try {
    to_distribution(none, 1e-9);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyInput);
  }
}

TEST(KlDivergence, Examples) {
  const std::vector<double> half{0.5, 0.5}, skew{0.8, 0.2};
  EXPECT_EQ(kl_divergence(half, half), 0.0);
  const double forward = 0.8 * std::log(1.6) + 0.2 * std::log(0.4);
  EXPECT_NEAR(kl_divergence(skew, half), forward, 1e-15);
  EXPECT_NEAR(kl_divergence(skew, half), 0.1927, 1e-4);
  EXPECT_NEAR(kl_divergence(half, skew), 0.2231, 1e-4);
  EXPECT_NE(kl_divergence(skew, half), kl_divergence(half, skew));
}

TEST(KlDivergence, RejectsNonDistributions) {
  const std::vector<double> bad{0.7, 0.7}, half{0.5, 0.5}, three{0.2, 0.3, 0.5};
  try {
    kl_divergence(bad, half);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotADistribution);
  }
  try {
    kl_divergence(three, half);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kLengthMismatch);
  }
}

TEST(KlDivergence, NonNegativeAndMatchesOracle) {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<std::size_t> len(2, 10);
  for (int i = 0; i < 300; ++i) {
    const std::size_t k = len(rng);
    const auto p = to_distribution(testing::random_scores(rng, k), kDefaultEpsilon);
    const auto q = to_distribution(testing::random_scores(rng, k), kDefaultEpsilon);
    const double got = kl_divergence(p, q);
    EXPECT_GE(got, 0.0);
    EXPECT_NEAR(got, std::max(0.0, oracle::kl(p, q)), 1e-12);
  }
}

TEST(Contrastivity, Examples) {
  std::vector<ClassContrastPair> same{make_contrast("a", {0.5, 0.5}, {0.5, 0.5}),
                                      make_contrast("b", {0.2, 0.8}, {0.2, 0.8})};
  EXPECT_EQ(contrastivity(same).mean_kl, 0.0);

  std::vector<ClassContrastPair> two{make_contrast("a", {0.8, 0.2}, {0.5, 0.5}),
                                     make_contrast("b", {0.5, 0.5}, {0.8, 0.2})};
  const auto summary = contrastivity(two);
  ASSERT_EQ(summary.per_instance.size(), 2u);
  EXPECT_NEAR(summary.per_instance[0].kl, 0.1927, 1e-4);
  EXPECT_NEAR(summary.per_instance[1].kl, 0.2231, 1e-4);
  EXPECT_NEAR(summary.mean_kl, 0.2079, 1e-4);
  EXPECT_EQ(summary.per_instance[0].epsilon_used, kDefaultEpsilon);

  std::vector<ClassContrastPair> one{make_contrast("a", {0.8, 0.2}, {0.5, 0.5})};
  const auto single = contrastivity(one);
  EXPECT_EQ(single.mean_kl, single.per_instance[0].kl);
}

TEST(Contrastivity, TokenOrderMustAgree) {
  auto pair = make_contrast("a", {0.8, 0.2}, {0.5, 0.5});
  std::swap(pair.explanation_q.tokens[0], pair.explanation_q.tokens[1]);
  std::vector<ClassContrastPair> v{pair};
  try {
    contrastivity(v);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTokenOrderMismatch);
  }
}

TEST(Contrastivity, ConvergesLinearlyAsEpsilonVanishes) {
  std::vector<ClassContrastPair> v{make_contrast("a", {0.6, -0.3, 0.1}, {0.2, 0.5, -0.3})};
  const double limit = contrastivity(v, 0.0).mean_kl;
  for (double eps : {1e-12, 1e-10, 1e-9, 1e-8, 1e-7, 1e-6}) {
    EXPECT_LE(std::abs(contrastivity(v, eps).mean_kl - limit), 10.0 * eps) << eps;
  }
}

TEST(ToDistribution, ZeroEpsilonNeedsSomeMass) {
  const std::vector<double> zeros{0, 0};
  try {
    to_distribution(zeros, 0.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kAllZeroScores);
  }
}

}  // namespace
}  // namespace xaieval
