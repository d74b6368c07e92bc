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

#ifndef XAIEVAL_HA_H_
#define XAIEVAL_HA_H_

// Human-reasoning agreement: ranked precision of explanation words against
// a human rationale.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "xaieval/types.h"

namespace xaieval {

struct RankJudgement {
  int rank = 0;            // 1-based
  double precision = 0.0;  // P(k)
  int relevant = 0;        // rel(k)
};

struct ApResult {
  std::string instance_id;
  int n = 0;
  double ap = 0.0;
  std::vector<RankJudgement> per_rank;
};

// Ranks explanation words by |score| and scores the first n against the
// rationale: AP = sum_k P(k) rel(k) / n. When `top_n` is absent, n is the
// rationale size capped at the token count.
//
// Throws Error(kInstanceMismatch) if the two records describe different
// instances and Error(kTopNOutOfRange) for n outside [1, K].
ApResult average_precision(const ExplanationRecord& explanation,
                           const RationaleAnnotation& rationale,
                           std::optional<int> top_n = std::nullopt);

// Mean AP, accumulated in instance_id order. Throws Error(kEmptyInput).
double mean_average_precision(std::span<const ApResult> results);

}  // namespace xaieval

#endif  // XAIEVAL_HA_H_
