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

#ifndef XAIEVAL_CWS_H_
#define XAIEVAL_CWS_H_

#include <span>
#include <vector>

#include "xaieval/error.h"
#include "xaieval/types.h"

namespace xaieval {

// w_ha * ha + w_cn * cn + w_ct * ct + w_r * (1 - r). Inputs outside [0, 1]
// are clamped and reported to `diagnostics`. Throws Error(kWeightInvalid).
double combined_weighted_score(double ha, double r, double cn, double ct,
                               const WeightVector& weights,
                               Diagnostics* diagnostics = nullptr);

// Merges per-metric fragments into one report per (dataset, model, method)
// and fills cws where all four metrics are present. Output is sorted by
// (dataset, model, method). Throws Error(kInconsistentGrid) when two
// fragments disagree on a metric value.
std::vector<MetricReport> merge_fragments(std::span<const MetricReport> fragments,
                                          const WeightVector& weights,
                                          Diagnostics* diagnostics = nullptr);

}  // namespace xaieval

#endif  // XAIEVAL_CWS_H_
