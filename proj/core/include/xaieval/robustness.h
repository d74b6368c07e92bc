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

#ifndef XAIEVAL_ROBUSTNESS_H_
#define XAIEVAL_ROBUSTNESS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "xaieval/types.h"

namespace xaieval {

enum class SalienceTier { kHigh, kLow };

std::string_view to_string(SalienceTier tier);
std::optional<SalienceTier> parse_salience_tier(std::string_view text);

struct PlanAction {
  std::size_t original_index = 0;
  PerturbationKind kind = PerturbationKind::kMask;
  SalienceTier salience_tier = SalienceTier::kHigh;

  friend bool operator==(const PlanAction&, const PlanAction&) = default;
};

// Instructions for the exporter: which words of one explanation to perturb.
struct PerturbationPlan {
  std::string dataset_id;
  std::string instance_id;
  std::string model_id;
  std::string method_id;
  std::vector<PlanAction> actions;
  std::uint64_t rng_seed = 0;

  friend bool operator==(const PerturbationPlan&,
                         const PerturbationPlan&) = default;
};

struct PlanOptions {
  PerturbationKind kind = PerturbationKind::kMask;
  double fraction = 0.15;
  SalienceTier tier = SalienceTier::kHigh;
  std::uint64_t seed = 0;
};

// Picks ceil(fraction * K) indices from the top (or bottom) of the magnitude
// ranking. Actions are listed in ranking order. Throws
// Error(kFractionOutOfRange) unless fraction lies in (0, 1].
PerturbationPlan make_perturbation_plan(const ExplanationRecord& record,
                                        const PlanOptions& options = {});

// d(k) for word k of the original. Operates on the scores as stored; pass
// L1-normalized records. Throws Error(kIndexOutOfRange).
double word_difference(const PerturbationPair& pair, std::size_t k);

struct WordDifference {
  std::size_t index = 0;
  int relevant = 0;
  double difference = 0.0;
};

struct RobustnessResult {
  std::string instance_id;
  double ad = 0.0;
  std::vector<WordDifference> per_word;
};

// AD over every word of the original, after L1-normalizing both sides.
// Propagates Error(kAllZeroScores).
RobustnessResult average_difference(const PerturbationPair& pair);

// Mean AD accumulated in instance_id order (stable for repeated ids).
// Throws Error(kEmptyInput).
double mean_average_difference(std::span<const RobustnessResult> results);

}  // namespace xaieval

#endif  // XAIEVAL_ROBUSTNESS_H_
