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

#ifndef XAIEVAL_PAPER_FIXTURE_H_
#define XAIEVAL_PAPER_FIXTURE_H_

// Published reference tables (HA, robustness, consistency, contrastivity and
// the combined score) and the audit that recomputes the combined score from
// the four metric tables.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "xaieval/types.h"

namespace xaieval {

struct PaperCell {
  std::string dataset_id;
  std::string model_id;
  std::string method_id;
  double ha = 0.0;
  double robustness = 0.0;
  double consistency = 0.0;
  double contrastivity = 0.0;
  double cws = 0.0;
  std::vector<std::string> quality_flags;
};

struct PaperFixture {
  std::vector<std::string> datasets;
  std::vector<std::string> models;
  std::vector<std::string> methods;
  std::vector<PaperCell> cells;  // dataset, method, model order

  const PaperCell* find(std::string_view dataset, std::string_view model,
                        std::string_view method) const;
};

// Parses the line-delimited fixture. Throws Error(kFixtureIncomplete) unless
// every (dataset, model, method) cell is present exactly once, and
// Error(kParseError) on malformed lines.
PaperFixture parse_paper_fixture(std::string_view text);

// The fixture compiled into the library.
std::string_view embedded_paper_fixture_text();
const PaperFixture& embedded_paper_fixture();

struct CellRef {
  std::string_view dataset_id;
  std::string_view model_id;
  std::string_view method_id;
};

// Cells whose published combined score must be reproduced at equal weights.
std::span<const CellRef> required_cells();

inline constexpr double kDefaultTolerance = 5e-4;

struct Discrepancy {
  std::string dataset_id;
  std::string model_id;
  std::string method_id;
  double recomputed_cws = 0.0;
  double paper_cws = 0.0;
  double abs_delta = 0.0;
  bool match = false;
  bool required = false;
};

struct DiscrepancyReport {
  std::vector<Discrepancy> rows;
  double tolerance = kDefaultTolerance;

  std::size_t match_count() const;
  bool required_cells_match() const;
};

DiscrepancyReport verify_paper_tables(const PaperFixture& fixture,
                                      const WeightVector& weights,
                                      double tolerance = kDefaultTolerance);

// dataset,model,method,recomputed_cws,paper_cws,abs_delta,verdict,required
std::string render_discrepancy_csv(const DiscrepancyReport& report);

}  // namespace xaieval

#endif  // XAIEVAL_PAPER_FIXTURE_H_
