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

#ifndef XAIEVAL_REPORT_H_
#define XAIEVAL_REPORT_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "xaieval/types.h"

namespace xaieval {

enum class ReportFormat { kCsv, kMarkdown };

std::optional<ReportFormat> parse_report_format(std::string_view text);

// Row/column ordering: listed names first in the given order, the rest
// lexicographically.
struct DisplayOrder {
  std::vector<std::string> methods;
  std::vector<std::string> models;
};

// Renders one metric for one dataset. CSV is long form
// (`method,model,value`); markdown pivots methods into rows and models into
// columns. Values use 4 decimals; absent values are empty. Throws
// Error(kInconsistentGrid) for mixed datasets or duplicated cells.
std::string render_report(std::span<const MetricReport> reports, Metric metric,
                          ReportFormat format, const DisplayOrder& order = {});

// Grouped-bar data, one JSON object per (method, model) with a value.
// Throws Error(kEmptyInput).
std::string emit_plot_data(std::span<const MetricReport> reports, Metric metric,
                           const DisplayOrder& order = {});

struct CsvCell {
  std::string method;
  std::string model;
  std::optional<double> value;

  friend bool operator==(const CsvCell&, const CsvCell&) = default;
};

// Reads back render_report's CSV. Throws Error(kParseError).
std::vector<CsvCell> parse_report_csv(std::string_view text);

}  // namespace xaieval

#endif  // XAIEVAL_REPORT_H_
