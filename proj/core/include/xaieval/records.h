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

#ifndef XAIEVAL_RECORDS_H_
#define XAIEVAL_RECORDS_H_

// JSON encodings of the line-delimited record formats.

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "xaieval/ingest.h"
#include "xaieval/robustness.h"
#include "xaieval/types.h"

namespace xaieval {

nlohmann::json to_json(const ExplanationRecord& record);
nlohmann::json to_json(const RationaleAnnotation& annotation);
nlohmann::json to_json(const AttentionSummary& summary);
nlohmann::json to_json(const PerturbationPair& pair);
nlohmann::json to_json(const ClassContrastPair& pair);
nlohmann::json to_json(const PerturbationPlan& plan);
nlohmann::json to_json(const MetricReport& report);

// Throws Error(kParseError) on a missing or mistyped field.
MetricReport metric_report_from_json(const nlohmann::json& object);

// One record per line, record_type first, canonical order. Annotations are
// written as their merged form.
std::string write_corpus(const CorpusIndex& corpus);

std::string write_lines(const std::vector<nlohmann::json>& records);

// Parses line-delimited metric_report records; other record types are
// skipped. Throws Error(kParseError) with the offending line number.
std::vector<MetricReport> read_metric_reports(std::string_view text,
                                              std::string_view source_name);

}  // namespace xaieval

#endif  // XAIEVAL_RECORDS_H_
