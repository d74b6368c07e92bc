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

#ifndef XAIEVAL_SCORES_H_
#define XAIEVAL_SCORES_H_

#include <cstddef>
#include <string>
#include <vector>

#include "xaieval/types.h"

namespace xaieval {

// Copy of `record` with scores divided by their L1 norm. Signs and token
// order are kept. Throws Error(kAllZeroScores) when every score is zero.
ExplanationRecord normalize_scores(const ExplanationRecord& record);

struct RankedToken {
  std::string token;
  double score = 0.0;
  std::size_t original_index = 0;

  friend bool operator==(const RankedToken&, const RankedToken&) = default;
};

// The `top_n` most salient tokens by |score|, ties resolved by position.
// Throws Error(kTopNOutOfRange) unless 1 <= top_n <= record.size().
std::vector<RankedToken> rank_tokens(const ExplanationRecord& record,
                                     int top_n);

}  // namespace xaieval

#endif  // XAIEVAL_SCORES_H_
