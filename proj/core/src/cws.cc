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

#include "xaieval/cws.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>

#include <fmt/format.h>

#include "xaieval/error.h"

namespace xaieval {
namespace {

double clamp_unit(double value, std::string_view name,
                  Diagnostics* diagnostics) {
  if (std::isnan(value)) {
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("{} is not a number", name));
  }
  if (value >= 0.0 && value <= 1.0) return value;
  const double clamped = std::clamp(value, 0.0, 1.0);
  if (diagnostics != nullptr) {
    diagnostics->warn(fmt::format("{} = {} outside [0, 1]; clamped to {}",
                                  name, value, clamped));
  }
  return clamped;
}

void merge_value(std::optional<double>& into, const std::optional<double>& from,
                 std::string_view metric, const MetricReport& where) {
  if (!from) return;
  if (into && *into != *from) {
    throw Error(ErrorCode::kInconsistentGrid,
                fmt::format("conflicting {} values for ({}, {}, {}): {} vs {}",
                            metric, where.dataset_id, where.model_id,
                            where.method_id, *into, *from));
  }
  into = from;
}

}  // namespace

double combined_weighted_score(double ha, double r, double cn, double ct,
                               const WeightVector& weights,
                               Diagnostics* diagnostics) {
  weights.validate();
  ha = clamp_unit(ha, "ha", diagnostics);
  r = clamp_unit(r, "robustness", diagnostics);
  cn = clamp_unit(cn, "consistency", diagnostics);
  ct = clamp_unit(ct, "contrastivity", diagnostics);
  return weights.ha * ha + weights.consistency * cn +
         weights.contrastivity * ct + weights.robustness * (1.0 - r);
}

std::vector<MetricReport> merge_fragments(std::span<const MetricReport> fragments,
                                          const WeightVector& weights,
                                          Diagnostics* diagnostics) {
  weights.validate();
  using Key = std::tuple<std::string, std::string, std::string>;
  std::map<Key, MetricReport> merged;
  for (const auto& f : fragments) {
    auto [it, inserted] = merged.try_emplace(
        Key{f.dataset_id, f.model_id, f.method_id});
    MetricReport& into = it->second;
    if (inserted) {
      into.dataset_id = f.dataset_id;
      into.model_id = f.model_id;
      into.method_id = f.method_id;
    }
    merge_value(into.ha, f.ha, "ha", f);
    merge_value(into.robustness, f.robustness, "robustness", f);
    merge_value(into.consistency, f.consistency, "consistency", f);
    merge_value(into.contrastivity, f.contrastivity, "contrastivity", f);
    for (const auto& [metric, count] : f.instance_count_per_metric) {
      if (metric == "cws") continue;
      auto [c, fresh] = into.instance_count_per_metric.try_emplace(metric, count);
      if (!fresh && c->second != count) {
        throw Error(ErrorCode::kInconsistentGrid,
                    fmt::format("conflicting {} instance counts for ({}, {}, "
                                "{})",
                                metric, f.dataset_id, f.model_id,
                                f.method_id));
      }
    }
  }

  std::vector<MetricReport> out;
  out.reserve(merged.size());
  for (auto& [key, report] : merged) {
    report.weights = weights;
    report.cws.reset();
    if (report.ha && report.robustness && report.consistency &&
        report.contrastivity) {
      Diagnostics local;
      report.cws = combined_weighted_score(*report.ha, *report.robustness,
                                           *report.consistency,
                                           *report.contrastivity, weights,
                                           &local);
      if (diagnostics != nullptr) {
        for (auto& w : local.warnings) {
          diagnostics->warn(fmt::format("({}, {}, {}): {}", report.dataset_id,
                                        report.model_id, report.method_id, w));
        }
      }
    } else if (diagnostics != nullptr) {
      diagnostics->warn(fmt::format("({}, {}, {}): cws omitted, not all four "
                                    "metrics present",
                                    report.dataset_id, report.model_id,
                                    report.method_id));
    }
    out.push_back(std::move(report));
  }
  return out;
}

}  // namespace xaieval
