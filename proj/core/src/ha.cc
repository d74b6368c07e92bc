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

#include "xaieval/ha.h"

#include <algorithm>
#include <vector>

#include <fmt/format.h>

#include "xaieval/error.h"
#include "xaieval/scores.h"
#include "xaieval/text.h"

namespace xaieval {

ApResult average_precision(const ExplanationRecord& explanation,
                           const RationaleAnnotation& rationale,
                           std::optional<int> top_n) {
  if (explanation.dataset_id != rationale.dataset_id ||
      explanation.instance_id != rationale.instance_id) {
    throw Error(ErrorCode::kInstanceMismatch,
                fmt::format("explanation ({}, {}) vs rationale ({}, {})",
                            explanation.dataset_id, explanation.instance_id,
                            rationale.dataset_id, rationale.instance_id));
  }
  const int n = top_n.value_or(static_cast<int>(
      std::min(rationale.rationale_words.size(), explanation.size())));
  const auto ranked = rank_tokens(explanation, n);

  ApResult result;
  result.instance_id = explanation.instance_id;
  result.n = n;
  result.per_rank.reserve(ranked.size());
  int hits = 0;
  double sum = 0.0;
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    const int k = static_cast<int>(i) + 1;
    // Each occurrence is judged on its own, duplicates included.
    const int rel =
        rationale.rationale_words.contains(normalize_word(ranked[i].token)) ? 1
                                                                            : 0;
    hits += rel;
    const double precision = static_cast<double>(hits) / k;
    sum += precision * rel;
    result.per_rank.push_back({k, precision, rel});
  }
  result.ap = sum / n;
  return result;
}

double mean_average_precision(std::span<const ApResult> results) {
  if (results.empty()) {
    throw Error(ErrorCode::kEmptyInput, "no AP results to average");
  }
  std::vector<const ApResult*> sorted;
  sorted.reserve(results.size());
  for (const auto& r : results) sorted.push_back(&r);
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const ApResult* a, const ApResult* b) {
                     return a->instance_id < b->instance_id;
                   });
  double sum = 0.0;
  for (const auto* r : sorted) sum += r->ap;
  return sum / static_cast<double>(sorted.size());
}

}  // namespace xaieval
