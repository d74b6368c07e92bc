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

#ifndef XAIEVAL_INGEST_H_
#define XAIEVAL_INGEST_H_

#include <compare>
#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "xaieval/types.h"

namespace xaieval {

enum class Severity { kWarning, kError };

struct RecordLocator {
  std::string file;
  std::size_t line = 0;  // 1-based; 0 when the issue concerns a whole file

  friend auto operator<=>(const RecordLocator&,
                          const RecordLocator&) = default;
  friend bool operator==(const RecordLocator&,
                         const RecordLocator&) = default;
};

struct ValidationIssue {
  Severity severity = Severity::kError;
  RecordLocator locator;
  std::string code;
  std::string message;

  friend bool operator==(const ValidationIssue&,
                         const ValidationIssue&) = default;
};

std::string format_issue(const ValidationIssue& issue);

struct AttentionKey {
  std::string dataset_id;
  std::string instance_id;
  std::string model_id;
  std::string seed_id;

  friend auto operator<=>(const AttentionKey&, const AttentionKey&) = default;
  friend bool operator==(const AttentionKey&, const AttentionKey&) = default;
};

using InstanceKey = std::pair<std::string, std::string>;  // dataset, instance

struct CorpusIndex {
  std::map<ExplanationKey, ExplanationRecord> explanations;
  std::map<InstanceKey, RationaleAnnotation> annotations;
  std::map<AttentionKey, AttentionSummary> attention;
  // Both pair lists are kept in canonical order (see canonical_less).
  std::vector<PerturbationPair> perturbation_pairs;
  std::vector<ClassContrastPair> contrast_pairs;

  std::size_t size() const {
    return explanations.size() + annotations.size() + attention.size() +
           perturbation_pairs.size() + contrast_pairs.size();
  }

  friend bool operator==(const CorpusIndex&, const CorpusIndex&) = default;
};

enum class AnnotationFallback { kNone, kUnion };

struct LoadOptions {
  bool lenient = false;
  AnnotationFallback annotation_fallback = AnnotationFallback::kNone;
  int jobs = 1;
};

struct LoadResult {
  // Absent when a strict load hit at least one error.
  std::optional<CorpusIndex> corpus;
  // Sorted by locator, then code and message.
  std::vector<ValidationIssue> issues;

  std::size_t error_count() const;
  std::size_t warning_count() const;
};

// In-memory source, mainly for tests and stdin.
struct SourceText {
  std::string name;
  std::string content;
};

LoadResult load_corpus(std::span<const std::filesystem::path> paths,
                       const LoadOptions& options = {});
LoadResult load_corpus(std::span<const SourceText> sources,
                       const LoadOptions& options = {});

// Majority vote: a word survives iff more than half of the annotators mark
// it. Throws Error(kEmptyAfterMerge) when nothing survives and
// Error(kInstanceMismatch) when inputs disagree on (dataset, instance).
RationaleAnnotation merge_annotations(
    std::span<const RationaleAnnotation> annotations);

// Fallback merge keeping every word any annotator marked.
RationaleAnnotation union_annotations(
    std::span<const RationaleAnnotation> annotations);

// The explanation for (dataset, instance, model, method). With an empty
// `predicted_class` the lexicographically smallest class is chosen. Returns
// nullptr when none matches.
const ExplanationRecord* find_explanation(const CorpusIndex& corpus,
                                          std::string_view dataset_id,
                                          std::string_view instance_id,
                                          std::string_view model_id,
                                          std::string_view method_id,
                                          std::string_view predicted_class = {});

// Canonical orderings for pair lists; independent of file order.
bool canonical_less(const PerturbationPair& a, const PerturbationPair& b);
bool canonical_less(const ClassContrastPair& a, const ClassContrastPair& b);

}  // namespace xaieval

#endif  // XAIEVAL_INGEST_H_
