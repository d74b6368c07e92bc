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

#include "xaieval/paper_fixture.h"

#include <array>
#include <cmath>
#include <set>
#include <sstream>
#include <tuple>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "xaieval/cws.h"
#include "xaieval/error.h"

namespace xaieval {

// Defined in the generated paper_fixture_data.cc.
extern const char kPaperFixtureData[];

namespace {

using nlohmann::json;

constexpr std::array<CellRef, 7> kRequiredCells = {{
    {"IMDB", "TinyBERT", "LIME"},
    {"IMDB", "TinyBERT", "SHAP"},
    {"IMDB", "TinyBERT", "LRP"},
    {"IMDB", "TinyBERT", "AMV"},
    {"IMDB", "XLM-R", "LIME"},
    {"TSE", "TinyBERT", "LIME"},
    {"TSE", "TinyBERT", "AMV"},
}};

bool is_required(const PaperCell& cell) {
  for (const auto& r : kRequiredCells) {
    if (r.dataset_id == cell.dataset_id && r.model_id == cell.model_id &&
        r.method_id == cell.method_id) {
      return true;
    }
  }
  return false;
}

}  // namespace

const PaperCell* PaperFixture::find(std::string_view dataset,
                                    std::string_view model,
                                    std::string_view method) const {
  for (const auto& c : cells) {
    if (c.dataset_id == dataset && c.model_id == model &&
        c.method_id == method) {
      return &c;
    }
  }
  return nullptr;
}

PaperFixture parse_paper_fixture(std::string_view text) {
  PaperFixture fixture;
  bool have_header = false;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::set<std::tuple<std::string, std::string, std::string>> seen;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const json o = json::parse(line);
      if (o.at("schema_version").get<int>() != kSchemaVersion) {
        throw Error(ErrorCode::kParseError, "unsupported schema_version");
      }
      const auto type = o.at("record_type").get<std::string>();
      if (type == "paper_fixture") {
        fixture.datasets = o.at("datasets").get<std::vector<std::string>>();
        fixture.models = o.at("models").get<std::vector<std::string>>();
        fixture.methods = o.at("methods").get<std::vector<std::string>>();
        have_header = true;
      } else if (type == "paper_cell") {
        PaperCell c;
        c.dataset_id = o.at("dataset_id").get<std::string>();
        c.model_id = o.at("model_id").get<std::string>();
        c.method_id = o.at("method_id").get<std::string>();
        c.ha = o.at("ha").get<double>();
        c.robustness = o.at("robustness").get<double>();
        c.consistency = o.at("consistency").get<double>();
        c.contrastivity = o.at("contrastivity").get<double>();
        c.cws = o.at("cws").get<double>();
        c.quality_flags =
            o.value("quality_flags", std::vector<std::string>{});
        if (!seen.emplace(c.dataset_id, c.model_id, c.method_id).second) {
          throw Error(ErrorCode::kFixtureIncomplete,
                      fmt::format("duplicate cell ({}, {}, {})", c.dataset_id,
                                  c.model_id, c.method_id));
        }
        fixture.cells.push_back(std::move(c));
      } else {
        throw Error(ErrorCode::kParseError,
                    fmt::format("unknown record_type '{}'", type));
      }
    } catch (const json::exception& e) {
      throw Error(ErrorCode::kParseError,
                  fmt::format("fixture line {}: {}", line_no, e.what()));
    }
  }
  if (!have_header) {
    throw Error(ErrorCode::kFixtureIncomplete, "fixture header missing");
  }
  const std::size_t expected = fixture.datasets.size() *
                               fixture.models.size() * fixture.methods.size();
  for (const auto& d : fixture.datasets) {
    for (const auto& method : fixture.methods) {
      for (const auto& model : fixture.models) {
        if (!seen.contains({d, model, method})) {
          throw Error(ErrorCode::kFixtureIncomplete,
                      fmt::format("missing cell ({}, {}, {})", d, model,
                                  method));
        }
      }
    }
  }
  if (fixture.cells.size() != expected || expected == 0) {
    throw Error(ErrorCode::kFixtureIncomplete,
                fmt::format("fixture has {} cells, grid needs {}",
                            fixture.cells.size(), expected));
  }
  return fixture;
}

std::string_view embedded_paper_fixture_text() { return kPaperFixtureData; }

const PaperFixture& embedded_paper_fixture() {
  static const PaperFixture fixture =
      parse_paper_fixture(embedded_paper_fixture_text());
  return fixture;
}

std::span<const CellRef> required_cells() { return kRequiredCells; }

std::size_t DiscrepancyReport::match_count() const {
  std::size_t n = 0;
  for (const auto& r : rows) n += r.match ? 1 : 0;
  return n;
}

bool DiscrepancyReport::required_cells_match() const {
  for (const auto& r : rows) {
    if (r.required && !r.match) return false;
  }
  return true;
}

DiscrepancyReport verify_paper_tables(const PaperFixture& fixture,
                                      const WeightVector& weights,
                                      double tolerance) {
  weights.validate();
  DiscrepancyReport report;
  report.tolerance = tolerance;
  report.rows.reserve(fixture.cells.size());
  for (const auto& c : fixture.cells) {
    const double recomputed = combined_weighted_score(
        c.ha, c.robustness, c.consistency, c.contrastivity, weights);
    const double delta = std::abs(recomputed - c.cws);
    report.rows.push_back({c.dataset_id, c.model_id, c.method_id, recomputed,
                           c.cws, delta, delta <= tolerance, is_required(c)});
  }
  return report;
}

std::string render_discrepancy_csv(const DiscrepancyReport& report) {
  std::string out =
      "dataset,model,method,recomputed_cws,paper_cws,abs_delta,verdict,"
      "required\n";
  for (const auto& r : report.rows) {
    out += fmt::format("{},{},{},{:.5f},{:.4f},{:.5f},{},{}\n", r.dataset_id,
                       r.model_id, r.method_id, r.recomputed_cws, r.paper_cws,
                       r.abs_delta, r.match ? "match" : "mismatch",
                       r.required ? "yes" : "no");
  }
  return out;
}

}  // namespace xaieval
