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

#include "xaieval/scores.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "xaieval/error.h"

namespace xaieval {

ExplanationRecord normalize_scores(const ExplanationRecord& record) {
  validate(record);
  double norm = 0.0;
  for (double s : record.scores) norm += std::abs(s);
  if (norm == 0.0) {
    throw Error(ErrorCode::kAllZeroScores,
                fmt::format("all saliency scores are zero for instance '{}'",
                            record.instance_id));
  }
  ExplanationRecord out = record;
  for (double& s : out.scores) s /= norm;
  return out;
}

std::vector<RankedToken> rank_tokens(const ExplanationRecord& record,
                                     int top_n) {
  validate(record);
  if (top_n < 1 || static_cast<std::size_t>(top_n) > record.size()) {
    throw Error(ErrorCode::kTopNOutOfRange,
                fmt::format("top_n {} outside [1, {}]", top_n, record.size()));
  }
  std::vector<std::size_t> order(record.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  const auto& s = record.scores;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return std::abs(s[a]) > std::abs(s[b]);
                   });
  std::vector<RankedToken> out;
  out.reserve(static_cast<std::size_t>(top_n));
  for (int i = 0; i < top_n; ++i) {
    const std::size_t idx = order[static_cast<std::size_t>(i)];
    out.push_back({record.tokens[idx], s[idx], idx});
  }
  return out;
}

}  // namespace xaieval
