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

#include <fmt/format.h>

#include "xaieval/error.h"

namespace xaieval {
namespace {

constexpr double kSumTolerance = 1e-9;

void check_distribution(std::span<const double> p, const char* name) {
  double sum = 0.0;
  for (double x : p) {
    if (!(x > 0.0) || !std::isfinite(x)) {
      throw Error(ErrorCode::kNotADistribution,
                  fmt::format("{} has a non-positive entry", name));
    }
    sum += x;
  }
  if (std::abs(sum - 1.0) > kSumTolerance) {
    throw Error(ErrorCode::kNotADistribution,
                fmt::format("{} sums to {}, not 1", name, sum));
  }
}

}  // namespace

std::vector<double> to_distribution(std::span<const double> scores,
                                    double epsilon) {
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) {
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("epsilon must be non-negative (got {})", epsilon));
  }
  if (scores.empty()) {
    throw Error(ErrorCode::kEmptyInput, "no scores to normalize");
  }
  std::vector<double> p;
  p.reserve(scores.size());
  double total = 0.0;
  for (double s : scores) {
    p.push_back(std::abs(s) + epsilon);
    total += p.back();
  }
  if (total == 0.0) {
    throw Error(ErrorCode::kAllZeroScores,
                "all scores are zero and epsilon is 0");
  }
  for (double& x : p) x /= total;
  return p;
}

std::vector<double> to_distribution(const ExplanationRecord& record,
                                    double epsilon) {
  validate(record);
  return to_distribution(record.scores, epsilon);
}

double kl_divergence(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                fmt::format("distribution lengths differ: {} vs {}", p.size(),
                            q.size()));
  }
  check_distribution(p, "p");
  check_distribution(q, "q");
  double kl = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != q[i]) kl += p[i] * std::log(p[i] / q[i]);
  }
  // Gibbs: KL >= 0; tiny negatives are rounding.
  return std::max(kl, 0.0);
}

ContrastivitySummary contrastivity(std::span<const ClassContrastPair> pairs,
                                   double epsilon) {
  if (pairs.empty()) {
    throw Error(ErrorCode::kEmptyInput, "no class contrast pairs");
  }
  ContrastivitySummary summary;
  summary.per_instance.reserve(pairs.size());
  for (const auto& pair : pairs) {
    if (pair.explanation_p.tokens != pair.explanation_q.tokens) {
      throw Error(ErrorCode::kTokenOrderMismatch,
                  fmt::format("contrast explanations for '{}' differ in "
                              "tokens",
                              pair.instance_id));
    }
    const auto p = to_distribution(pair.explanation_p, epsilon);
    const auto q = to_distribution(pair.explanation_q, epsilon);
    summary.per_instance.push_back(
        {pair.instance_id, kl_divergence(p, q), epsilon});
  }
  std::stable_sort(summary.per_instance.begin(), summary.per_instance.end(),
                   [](const ContrastResult& a, const ContrastResult& b) {
                     return a.instance_id < b.instance_id;
                   });
  double sum = 0.0;
  for (const auto& r : summary.per_instance) sum += r.kl;
  summary.mean_kl = sum / static_cast<double>(summary.per_instance.size());
  return summary;
}

}  // namespace xaieval
