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

#ifndef XAIEVAL_TYPES_H_
#define XAIEVAL_TYPES_H_

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace xaieval {

inline constexpr int kSchemaVersion = 1;

// One instance's word-level saliency vector for a (dataset, model, method)
// triple. tokens[k] and scores[k] describe the same word.
struct ExplanationRecord {
  int schema_version = kSchemaVersion;
  std::string dataset_id;
  std::string instance_id;
  std::string model_id;
  std::string method_id;
  std::string predicted_class;
  std::vector<std::string> tokens;
  std::vector<double> scores;

  std::size_t size() const { return tokens.size(); }

  friend bool operator==(const ExplanationRecord&,
                         const ExplanationRecord&) = default;
};

// Throws Error(kLengthMismatch) when tokens/scores disagree in length and
// Error(kInvalidArgument) for an empty or non-finite record.
void validate(const ExplanationRecord& record);

struct ExplanationKey {
  std::string dataset_id;
  std::string instance_id;
  std::string model_id;
  std::string method_id;
  std::string predicted_class;

  friend auto operator<=>(const ExplanationKey&,
                          const ExplanationKey&) = default;
  friend bool operator==(const ExplanationKey&,
                         const ExplanationKey&) = default;
};

ExplanationKey key_of(const ExplanationRecord& record);

// Human-marked salient words for one instance. Words are stored in their
// canonical matching form (see normalize_word).
struct RationaleAnnotation {
  std::string dataset_id;
  std::string instance_id;
  std::string annotator_id;
  std::set<std::string> rationale_words;

  friend bool operator==(const RationaleAnnotation&,
                         const RationaleAnnotation&) = default;
};

// Per-layer per-token attention for one instance under one model seed. A
// single pre-averaged vector is stored as one layer.
struct AttentionSummary {
  std::string dataset_id;
  std::string instance_id;
  std::string model_id;
  std::string seed_id;
  std::vector<std::vector<double>> per_token_attention;

  int layers() const { return static_cast<int>(per_token_attention.size()); }
  std::size_t token_count() const {
    return per_token_attention.empty() ? 0 : per_token_attention.front().size();
  }

  friend bool operator==(const AttentionSummary&,
                         const AttentionSummary&) = default;
};

// Throws Error(kLengthMismatch) for ragged layers and Error(kInvalidArgument)
// for negative or non-finite weights.
void validate(const AttentionSummary& summary);

enum class PerturbationKind { kMask, kDelete, kSynonym };

std::string_view to_string(PerturbationKind kind);
std::optional<PerturbationKind> parse_perturbation_kind(std::string_view text);

struct PerturbationPair {
  ExplanationRecord original;
  ExplanationRecord perturbed;
  PerturbationKind perturbation_kind = PerturbationKind::kMask;
  std::vector<int> relevance_mask;

  friend bool operator==(const PerturbationPair&,
                         const PerturbationPair&) = default;
};

// mask[k] = 1 iff the matching form of original.tokens[k] occurs anywhere in
// perturbed.tokens.
std::vector<int> compute_relevance_mask(const ExplanationRecord& original,
                                        const ExplanationRecord& perturbed);

struct ClassContrastPair {
  std::string dataset_id;
  std::string instance_id;
  std::string model_id;
  std::string method_id;
  ExplanationRecord explanation_p;  // target class
  ExplanationRecord explanation_q;  // contrast class

  friend bool operator==(const ClassContrastPair&,
                         const ClassContrastPair&) = default;
};

enum class Metric { kHa, kRobustness, kConsistency, kContrastivity, kCws };

std::string_view to_string(Metric metric);
std::optional<Metric> parse_metric(std::string_view text);
bool lower_is_better(Metric metric);

// Priority weights of the combined score, in (HA, consistency,
// contrastivity, robustness) order.
struct WeightVector {
  double ha = 0.25;
  double consistency = 0.25;
  double contrastivity = 0.25;
  double robustness = 0.25;

  // Throws Error(kWeightInvalid) on a negative entry or a sum away from 1.
  void validate() const;

  // Parses "w_ha,w_cn,w_ct,w_r"; validates the result.
  static WeightVector parse(std::string_view text);

  friend bool operator==(const WeightVector&, const WeightVector&) = default;
};

struct MetricReport {
  std::string dataset_id;
  std::string model_id;
  std::string method_id;
  std::optional<double> ha;
  std::optional<double> robustness;
  std::optional<double> consistency;
  std::optional<double> contrastivity;
  std::optional<double> cws;
  WeightVector weights;
  std::map<std::string, int> instance_count_per_metric;
  std::string tool_version;
  std::string config_digest;

  std::optional<double> value(Metric metric) const;

  friend bool operator==(const MetricReport&, const MetricReport&) = default;
};

}  // namespace xaieval

#endif  // XAIEVAL_TYPES_H_
