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

#include "xaieval/records.h"

#include <sstream>

#include <fmt/format.h>

#include "xaieval/error.h"

namespace xaieval {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

json explanation_body(const ExplanationRecord& r) {
  json o;
  o["schema_version"] = r.schema_version;
  o["dataset_id"] = r.dataset_id;
  o["instance_id"] = r.instance_id;
  o["model_id"] = r.model_id;
  o["method_id"] = r.method_id;
  o["predicted_class"] = r.predicted_class;
  o["tokens"] = r.tokens;
  o["scores"] = r.scores;
  return o;
}

json with_type(std::string_view type) {
  json o;
  o["record_type"] = type;
  o["schema_version"] = kSchemaVersion;
  return o;
}

}  // namespace

json to_json(const ExplanationRecord& record) {
  json o = with_type("explanation");
  o.update(explanation_body(record));
  return o;
}

json to_json(const RationaleAnnotation& annotation) {
  json o = with_type("annotation");
  o["dataset_id"] = annotation.dataset_id;
  o["instance_id"] = annotation.instance_id;
  o["annotator_id"] = annotation.annotator_id;
  o["rationale_words"] = annotation.rationale_words;
  return o;
}

json to_json(const AttentionSummary& summary) {
  json o = with_type("attention");
  o["dataset_id"] = summary.dataset_id;
  o["instance_id"] = summary.instance_id;
  o["model_id"] = summary.model_id;
  o["seed_id"] = summary.seed_id;
  o["layers"] = summary.layers();
  o["per_token_attention"] = summary.per_token_attention;
  return o;
}

json to_json(const PerturbationPair& pair) {
  json o = with_type("perturbation_pair");
  o["dataset_id"] = pair.original.dataset_id;
  o["instance_id"] = pair.original.instance_id;
  o["model_id"] = pair.original.model_id;
  o["method_id"] = pair.original.method_id;
  o["perturbation_kind"] = to_string(pair.perturbation_kind);
  o["relevance_mask"] = pair.relevance_mask;
  o["original"] = explanation_body(pair.original);
  o["perturbed"] = explanation_body(pair.perturbed);
  return o;
}

json to_json(const ClassContrastPair& pair) {
  json o = with_type("class_contrast_pair");
  o["dataset_id"] = pair.dataset_id;
  o["instance_id"] = pair.instance_id;
  o["model_id"] = pair.model_id;
  o["method_id"] = pair.method_id;
  o["explanation_p"] = explanation_body(pair.explanation_p);
  o["explanation_q"] = explanation_body(pair.explanation_q);
  return o;
}

json to_json(const PerturbationPlan& plan) {
  json o = with_type("perturbation_plan");
  o["dataset_id"] = plan.dataset_id;
  o["instance_id"] = plan.instance_id;
  o["model_id"] = plan.model_id;
  o["method_id"] = plan.method_id;
  o["rng_seed"] = plan.rng_seed;
  json actions = json::array();
  for (const auto& a : plan.actions) {
    json action;
    action["original_index"] = a.original_index;
    action["kind"] = to_string(a.kind);
    action["salience_tier"] = to_string(a.salience_tier);
    actions.push_back(std::move(action));
  }
  o["actions"] = std::move(actions);
  return o;
}

json to_json(const MetricReport& report) {
  json o = with_type("metric_report");
  o["dataset_id"] = report.dataset_id;
  o["model_id"] = report.model_id;
  o["method_id"] = report.method_id;
  auto put = [&](const char* name, const std::optional<double>& v) {
    o[name] = v ? json(*v) : json(nullptr);
  };
  put("ha", report.ha);
  put("robustness", report.robustness);
  put("consistency", report.consistency);
  put("contrastivity", report.contrastivity);
  put("cws", report.cws);
  o["weights"] = {report.weights.ha, report.weights.consistency,
                  report.weights.contrastivity, report.weights.robustness};
  o["instance_count_per_metric"] = report.instance_count_per_metric;
  o["tool_version"] = report.tool_version;
  o["config_digest"] = report.config_digest;
  return o;
}

MetricReport metric_report_from_json(const json& o) {
  try {
    MetricReport r;
    r.dataset_id = o.at("dataset_id").get<std::string>();
    r.model_id = o.at("model_id").get<std::string>();
    r.method_id = o.at("method_id").get<std::string>();
    auto get = [&](const char* name) -> std::optional<double> {
      auto it = o.find(name);
      if (it == o.end() || it->is_null()) return std::nullopt;
      return it->get<double>();
    };
    r.ha = get("ha");
    r.robustness = get("robustness");
    r.consistency = get("consistency");
    r.contrastivity = get("contrastivity");
    r.cws = get("cws");
    if (auto it = o.find("weights"); it != o.end()) {
      auto w = it->get<std::vector<double>>();
      if (w.size() != 4) {
        throw Error(ErrorCode::kParseError, "weights must have 4 entries");
      }
      r.weights = {w[0], w[1], w[2], w[3]};
    }
    if (auto it = o.find("instance_count_per_metric"); it != o.end()) {
      r.instance_count_per_metric = it->get<std::map<std::string, int>>();
    }
    if (auto it = o.find("tool_version"); it != o.end()) {
      r.tool_version = it->get<std::string>();
    }
    if (auto it = o.find("config_digest"); it != o.end()) {
      r.config_digest = it->get<std::string>();
    }
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError,
                fmt::format("bad metric_report: {}", e.what()));
  }
}

std::string write_lines(const std::vector<json>& records) {
  std::string out;
  for (const auto& r : records) {
    // record_type leads; remaining keys keep json's sorted order.
    ordered_json o;
    if (r.contains("record_type")) o["record_type"] = r["record_type"];
    for (auto it = r.begin(); it != r.end(); ++it) {
      if (it.key() != "record_type") o[it.key()] = it.value();
    }
    out += o.dump();
    out += '\n';
  }
  return out;
}

std::string write_corpus(const CorpusIndex& corpus) {
  std::vector<json> lines;
  for (const auto& [key, r] : corpus.explanations) lines.push_back(to_json(r));
  for (const auto& [key, a] : corpus.annotations) lines.push_back(to_json(a));
  for (const auto& [key, s] : corpus.attention) lines.push_back(to_json(s));
  for (const auto& p : corpus.perturbation_pairs) lines.push_back(to_json(p));
  for (const auto& c : corpus.contrast_pairs) lines.push_back(to_json(c));
  return write_lines(lines);
}

std::vector<MetricReport> read_metric_reports(std::string_view text,
                                              std::string_view source_name) {
  std::vector<MetricReport> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      json o = json::parse(line);
      if (!o.is_object()) {
        throw Error(ErrorCode::kParseError, "line is not an object");
      }
      if (o.value("record_type", "") != "metric_report") continue;
      out.push_back(metric_report_from_json(o));
    } catch (const json::exception& e) {
      throw Error(ErrorCode::kParseError,
                  fmt::format("{}:{}: {}", source_name, line_no, e.what()));
    } catch (const Error& e) {
      throw Error(ErrorCode::kParseError,
                  fmt::format("{}:{}: {}", source_name, line_no, e.what()));
    }
  }
  return out;
}

}  // namespace xaieval
