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

#include "xaieval/report.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "xaieval/error.h"

namespace xaieval {
namespace {

// Names listed in `preferred` first, in that order; the rest sorted.
std::vector<std::string> ordered(const std::set<std::string>& present,
                                 const std::vector<std::string>& preferred) {
  std::vector<std::string> out;
  std::set<std::string> placed;
  for (const auto& p : preferred) {
    if (present.contains(p) && placed.insert(p).second) out.push_back(p);
  }
  for (const auto& p : present) {
    if (!placed.contains(p)) out.push_back(p);
  }
  return out;
}

struct Grid {
  std::string dataset_id;
  std::vector<std::string> methods;
  std::vector<std::string> models;
  std::map<std::pair<std::string, std::string>, std::optional<double>> cells;
};

Grid build_grid(std::span<const MetricReport> reports, Metric metric,
                const DisplayOrder& order) {
  if (reports.empty()) {
    throw Error(ErrorCode::kEmptyInput, "no reports to render");
  }
  Grid grid;
  grid.dataset_id = reports.front().dataset_id;
  std::set<std::string> methods, models;
  for (const auto& r : reports) {
    if (r.dataset_id != grid.dataset_id) {
      throw Error(ErrorCode::kInconsistentGrid,
                  fmt::format("reports mix datasets '{}' and '{}'",
                              grid.dataset_id, r.dataset_id));
    }
    if (!grid.cells.emplace(std::pair{r.method_id, r.model_id}, r.value(metric))
             .second) {
      throw Error(ErrorCode::kInconsistentGrid,
                  fmt::format("duplicate cell ({}, {})", r.method_id,
                              r.model_id));
    }
    methods.insert(r.method_id);
    models.insert(r.model_id);
  }
  grid.methods = ordered(methods, order.methods);
  grid.models = ordered(models, order.models);
  return grid;
}

std::string format_value(const std::optional<double>& v) {
  return v ? fmt::format("{:.4f}", *v) : std::string();
}

// RFC 4180 quoting for names containing separators.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string md_field(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(std::move(cur));
  return out;
}

}  // namespace

std::optional<ReportFormat> parse_report_format(std::string_view text) {
  if (text == "csv") return ReportFormat::kCsv;
  if (text == "markdown" || text == "md") return ReportFormat::kMarkdown;
  return std::nullopt;
}

std::string render_report(std::span<const MetricReport> reports, Metric metric,
                          ReportFormat format, const DisplayOrder& order) {
  const Grid grid = build_grid(reports, metric, order);
  std::string out;
  if (format == ReportFormat::kCsv) {
    out = "method,model,value\n";
    for (const auto& method : grid.methods) {
      for (const auto& model : grid.models) {
        auto it = grid.cells.find({method, model});
        if (it == grid.cells.end()) continue;
        out += fmt::format("{},{},{}\n", csv_field(method), csv_field(model),
                           format_value(it->second));
      }
    }
    return out;
  }
  out = fmt::format("### {} ({}{})\n\n", to_string(metric),
                    md_field(grid.dataset_id),
                    lower_is_better(metric) ? ", lower is better" : "");
  out += "| method |";
  for (const auto& model : grid.models) out += fmt::format(" {} |", md_field(model));
  out += "\n| --- |";
  for (std::size_t i = 0; i < grid.models.size(); ++i) out += " ---: |";
  out += "\n";
  for (const auto& method : grid.methods) {
    out += fmt::format("| {} |", md_field(method));
    for (const auto& model : grid.models) {
      auto it = grid.cells.find({method, model});
      const std::string v =
          it == grid.cells.end() ? std::string() : format_value(it->second);
      out += v.empty() ? " |" : fmt::format(" {} |", v);
    }
    out += "\n";
  }
  return out;
}

std::string emit_plot_data(std::span<const MetricReport> reports, Metric metric,
                           const DisplayOrder& order) {
  if (reports.empty()) {
    throw Error(ErrorCode::kEmptyInput, "no reports to plot");
  }
  std::set<std::string> datasets;
  for (const auto& r : reports) datasets.insert(r.dataset_id);
  std::string out;
  for (const auto& dataset : datasets) {
    std::vector<MetricReport> subset;
    for (const auto& r : reports) {
      if (r.dataset_id == dataset) subset.push_back(r);
    }
    const Grid grid = build_grid(subset, metric, order);
    for (const auto& method : grid.methods) {
      for (const auto& model : grid.models) {
        auto it = grid.cells.find({method, model});
        if (it == grid.cells.end() || !it->second) continue;
        nlohmann::ordered_json o;
        o["record_type"] = "plot_point";
        o["metric"] = to_string(metric);
        o["dataset_id"] = dataset;
        o["method"] = method;
        o["model"] = model;
        o["value"] = *it->second;
        o["lower_is_better"] = lower_is_better(metric);
        out += o.dump();
        out += '\n';
      }
    }
  }
  return out;
}

std::vector<CsvCell> parse_report_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != "method,model,value") {
    throw Error(ErrorCode::kParseError, "expected header method,model,value");
  }
  std::vector<CsvCell> out;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    auto fields = split_csv_line(line);
    if (fields.size() != 3) {
      throw Error(ErrorCode::kParseError,
                  fmt::format("line {}: expected 3 fields", line_no));
    }
    CsvCell cell{fields[0], fields[1], std::nullopt};
    if (!fields[2].empty()) {
      char* end = nullptr;
      cell.value = std::strtod(fields[2].c_str(), &end);
      if (end != fields[2].c_str() + fields[2].size()) {
        throw Error(ErrorCode::kParseError,
                    fmt::format("line {}: bad value '{}'", line_no, fields[2]));
      }
    }
    out.push_back(std::move(cell));
  }
  return out;
}

}  // namespace xaieval
