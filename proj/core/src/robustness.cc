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

#include "xaieval/robustness.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "xaieval/error.h"
#include "xaieval/scores.h"
#include "xaieval/text.h"

namespace xaieval {
namespace {

constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ULL;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ULL;

std::uint64_t fnv1a(std::uint64_t h, std::string_view text) {
  for (unsigned char c : text) {
    h ^= c;
    h *= kFnvPrime;
  }
  // Field separator so ("ab","c") and ("a","bc") differ.
  h ^= 0xff;
  h *= kFnvPrime;
  return h;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// For each original position, the matched position in the perturbed record
// or -1. The j-th occurrence of a word in the original consumes the j-th
// occurrence in the perturbed record.
std::vector<long> match_positions(const ExplanationRecord& original,
                                  const ExplanationRecord& perturbed) {
  std::map<std::string, std::vector<std::size_t>> slots;
  for (std::size_t j = 0; j < perturbed.tokens.size(); ++j) {
    slots[normalize_word(perturbed.tokens[j])].push_back(j);
  }
  std::map<std::string, std::size_t> used;
  std::vector<long> out(original.tokens.size(), -1);
  for (std::size_t k = 0; k < original.tokens.size(); ++k) {
    const std::string word = normalize_word(original.tokens[k]);
    auto it = slots.find(word);
    if (it == slots.end()) continue;
    std::size_t& next = used[word];
    if (next < it->second.size()) out[k] = static_cast<long>(it->second[next++]);
  }
  return out;
}

double difference_at(const ExplanationRecord& original,
                     const ExplanationRecord& perturbed,
                     const std::vector<long>& matches, std::size_t k) {
  if (matches[k] < 0) return std::abs(original.scores[k]);
  return std::abs(original.scores[k] -
                  perturbed.scores[static_cast<std::size_t>(matches[k])]);
}

}  // namespace

std::string_view to_string(SalienceTier tier) {
  return tier == SalienceTier::kHigh ? "high" : "low";
}

std::optional<SalienceTier> parse_salience_tier(std::string_view text) {
  if (text == "high") return SalienceTier::kHigh;
  if (text == "low") return SalienceTier::kLow;
  return std::nullopt;
}

PerturbationPlan make_perturbation_plan(const ExplanationRecord& record,
                                        const PlanOptions& options) {
  validate(record);
  if (!(options.fraction > 0.0 && options.fraction <= 1.0)) {
    throw Error(ErrorCode::kFractionOutOfRange,
                fmt::format("fraction {} outside (0, 1]", options.fraction));
  }
  const std::size_t k = record.size();
  // Guard against 0.15 * 20 = 3.0000000000000004 rounding up to 4.
  const double raw = options.fraction * static_cast<double>(k);
  std::size_t count = static_cast<std::size_t>(std::ceil(raw - 1e-9));
  count = std::clamp<std::size_t>(count, 1, k);

  const auto ranking = rank_tokens(record, static_cast<int>(k));
  PerturbationPlan plan;
  plan.dataset_id = record.dataset_id;
  plan.instance_id = record.instance_id;
  plan.model_id = record.model_id;
  plan.method_id = record.method_id;
  for (std::size_t i = 0; i < count; ++i) {
    const auto& picked = options.tier == SalienceTier::kHigh
                             ? ranking[i]
                             : ranking[k - 1 - i];
    plan.actions.push_back(
        {picked.original_index, options.kind, options.tier});
  }
  std::uint64_t h = kFnvOffset;
  for (std::string_view part : {std::string_view(record.dataset_id),
                                std::string_view(record.instance_id),
                                std::string_view(record.model_id),
                                std::string_view(record.method_id),
                                std::string_view(record.predicted_class)}) {
    h = fnv1a(h, part);
  }
  plan.rng_seed = splitmix64(options.seed ^ h);
  return plan;
}

double word_difference(const PerturbationPair& pair, std::size_t k) {
  if (k >= pair.original.size()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                fmt::format("word index {} outside [0, {})", k,
                            pair.original.size()));
  }
  const auto matches = match_positions(pair.original, pair.perturbed);
  return difference_at(pair.original, pair.perturbed, matches, k);
}

RobustnessResult average_difference(const PerturbationPair& pair) {
  const ExplanationRecord original = normalize_scores(pair.original);
  const ExplanationRecord perturbed = normalize_scores(pair.perturbed);
  const auto matches = match_positions(original, perturbed);

  RobustnessResult result;
  result.instance_id = original.instance_id;
  result.per_word.reserve(original.size());
  double sum = 0.0;
  for (std::size_t k = 0; k < original.size(); ++k) {
    const double d = difference_at(original, perturbed, matches, k);
    sum += d;
    result.per_word.push_back({k, matches[k] >= 0 ? 1 : 0, d});
  }
  result.ad = sum / static_cast<double>(original.size());
  return result;
}

double mean_average_difference(std::span<const RobustnessResult> results) {
  if (results.empty()) {
    throw Error(ErrorCode::kEmptyInput, "no AD results to average");
  }
  std::vector<const RobustnessResult*> sorted;
  sorted.reserve(results.size());
  for (const auto& r : results) sorted.push_back(&r);
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const RobustnessResult* a, const RobustnessResult* b) {
                     return a->instance_id < b->instance_id;
                   });
  double sum = 0.0;
  for (const auto* r : sorted) sum += r->ad;
  return sum / static_cast<double>(sorted.size());
}

}  // namespace xaieval
