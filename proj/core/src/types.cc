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

#include "xaieval/types.h"

#include <cmath>
#include <cstdlib>
#include <string>
#include <unordered_set>

#include <fmt/format.h>

#include "xaieval/error.h"
#include "xaieval/text.h"

namespace xaieval {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kAllZeroScores: return "AllZeroScores";
    case ErrorCode::kTopNOutOfRange: return "TopNOutOfRange";
    case ErrorCode::kInstanceMismatch: return "InstanceMismatch";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kFractionOutOfRange: return "FractionOutOfRange";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kZeroVector: return "ZeroVector";
    case ErrorCode::kDegenerateSeries: return "DegenerateSeries";
    case ErrorCode::kInsufficientInstances: return "InsufficientInstances";
    case ErrorCode::kAlignmentError: return "AlignmentError";
    case ErrorCode::kNotADistribution: return "NotADistribution";
    case ErrorCode::kTokenOrderMismatch: return "TokenOrderMismatch";
    case ErrorCode::kWeightInvalid: return "WeightInvalid";
    case ErrorCode::kFixtureIncomplete: return "FixtureIncomplete";
    case ErrorCode::kInconsistentGrid: return "InconsistentGrid";
    case ErrorCode::kEmptyAfterMerge: return "EmptyAfterMerge";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

void validate(const ExplanationRecord& record) {
  if (record.tokens.size() != record.scores.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                fmt::format("length mismatch: {} tokens, {} scores",
                            record.tokens.size(), record.scores.size()));
  }
  if (record.tokens.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "explanation has no tokens");
  }
  for (double s : record.scores) {
    if (!std::isfinite(s)) {
      throw Error(ErrorCode::kInvalidArgument, "non-finite saliency score");
    }
  }
}

ExplanationKey key_of(const ExplanationRecord& record) {
  return {record.dataset_id, record.instance_id, record.model_id,
          record.method_id, record.predicted_class};
}

void validate(const AttentionSummary& summary) {
  if (summary.per_token_attention.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "attention has no layers");
  }
  const std::size_t width = summary.token_count();
  if (width == 0) {
    throw Error(ErrorCode::kInvalidArgument, "attention vectors are empty");
  }
  for (const auto& layer : summary.per_token_attention) {
    if (layer.size() != width) {
      throw Error(ErrorCode::kLengthMismatch,
                  fmt::format("attention layer length {} differs from {}",
                              layer.size(), width));
    }
    for (double a : layer) {
      if (!std::isfinite(a) || a < 0.0) {
        throw Error(ErrorCode::kInvalidArgument,
                    "attention weights must be finite and non-negative");
      }
    }
  }
}

std::string_view to_string(PerturbationKind kind) {
  switch (kind) {
    case PerturbationKind::kMask: return "mask";
    case PerturbationKind::kDelete: return "delete";
    case PerturbationKind::kSynonym: return "synonym";
  }
  return "mask";
}

std::optional<PerturbationKind> parse_perturbation_kind(std::string_view text) {
  if (text == "mask") return PerturbationKind::kMask;
  if (text == "delete") return PerturbationKind::kDelete;
  if (text == "synonym") return PerturbationKind::kSynonym;
  return std::nullopt;
}

std::vector<int> compute_relevance_mask(const ExplanationRecord& original,
                                        const ExplanationRecord& perturbed) {
  std::unordered_set<std::string> present;
  for (const auto& t : perturbed.tokens) present.insert(normalize_word(t));
  std::vector<int> mask;
  mask.reserve(original.tokens.size());
  for (const auto& t : original.tokens) {
    mask.push_back(present.contains(normalize_word(t)) ? 1 : 0);
  }
  return mask;
}

std::string_view to_string(Metric metric) {
  switch (metric) {
    case Metric::kHa: return "ha";
    case Metric::kRobustness: return "robustness";
    case Metric::kConsistency: return "consistency";
    case Metric::kContrastivity: return "contrastivity";
    case Metric::kCws: return "cws";
  }
  return "ha";
}

std::optional<Metric> parse_metric(std::string_view text) {
  for (Metric m : {Metric::kHa, Metric::kRobustness, Metric::kConsistency,
                   Metric::kContrastivity, Metric::kCws}) {
    if (to_string(m) == text) return m;
  }
  return std::nullopt;
}

bool lower_is_better(Metric metric) { return metric == Metric::kRobustness; }

void WeightVector::validate() const {
  for (double w : {ha, consistency, contrastivity, robustness}) {
    if (!std::isfinite(w) || w < 0.0) {
      throw Error(ErrorCode::kWeightInvalid,
                  "weights must be finite and non-negative");
    }
  }
  const double sum = ha + consistency + contrastivity + robustness;
  if (std::abs(sum - 1.0) > 1e-9) {
    throw Error(ErrorCode::kWeightInvalid,
                fmt::format("weights must sum to 1 (got {})", sum));
  }
}

WeightVector WeightVector::parse(std::string_view text) {
  std::vector<double> parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    const std::string piece(text.substr(start, comma - start));
    char* end = nullptr;
    const double v = std::strtod(piece.c_str(), &end);
    if (piece.empty() || end != piece.c_str() + piece.size()) {
      throw Error(ErrorCode::kWeightInvalid,
                  fmt::format("malformed weight '{}'", piece));
    }
    parts.push_back(v);
    start = comma + 1;
  }
  if (parts.size() != 4) {
    throw Error(ErrorCode::kWeightInvalid,
                "weights must have four entries: ha,consistency,"
                "contrastivity,robustness");
  }
  WeightVector w{parts[0], parts[1], parts[2], parts[3]};
  w.validate();
  return w;
}

std::optional<double> MetricReport::value(Metric metric) const {
  switch (metric) {
    case Metric::kHa: return ha;
    case Metric::kRobustness: return robustness;
    case Metric::kConsistency: return consistency;
    case Metric::kContrastivity: return contrastivity;
    case Metric::kCws: return cws;
  }
  return std::nullopt;
}

}  // namespace xaieval
