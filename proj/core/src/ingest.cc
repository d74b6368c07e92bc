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

#include "xaieval/ingest.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string_view>
#include <tuple>
#include <variant>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "xaieval/error.h"
#include "xaieval/parallel.h"
#include "xaieval/text.h"

namespace xaieval {
namespace {

using nlohmann::json;

// Raised while decoding one line; becomes a ValidationIssue.
struct LineError {
  std::string code;
  std::string message;
};

struct ExplanationRef {
  std::optional<ExplanationRecord> inline_record;
  std::string predicted_class;  // used when inline_record is absent
};

struct PendingPerturbation {
  std::string dataset_id, instance_id, model_id, method_id;
  PerturbationKind kind = PerturbationKind::kMask;
  std::vector<int> mask;
  ExplanationRef original;
  ExplanationRecord perturbed;
};

struct PendingContrast {
  std::string dataset_id, instance_id, model_id, method_id;
  ExplanationRef p;
  ExplanationRef q;
};

using Item = std::variant<ExplanationRecord, RationaleAnnotation,
                          AttentionSummary, PendingPerturbation,
                          PendingContrast>;

struct LocatedItem {
  RecordLocator locator;
  Item item;
};

struct ParsedSource {
  std::vector<LocatedItem> items;
  std::vector<ValidationIssue> issues;
};

const std::map<std::string, std::set<std::string>, std::less<>>&
known_fields() {
  static const auto* fields =
      new std::map<std::string, std::set<std::string>, std::less<>>{
          {"explanation",
           {"record_type", "schema_version", "dataset_id", "instance_id",
            "model_id", "method_id", "predicted_class", "tokens", "scores"}},
          {"annotation",
           {"record_type", "schema_version", "dataset_id", "instance_id",
            "annotator_id", "rationale_words"}},
          {"attention",
           {"record_type", "schema_version", "dataset_id", "instance_id",
            "model_id", "seed_id", "layers", "per_token_attention"}},
          {"perturbation_pair",
           {"record_type", "schema_version", "dataset_id", "instance_id",
            "model_id", "method_id", "perturbation_kind", "relevance_mask",
            "original", "original_class", "perturbed"}},
          {"class_contrast_pair",
           {"record_type", "schema_version", "dataset_id", "instance_id",
            "model_id", "method_id", "explanation_p", "explanation_q",
            "class_p", "class_q"}},
          {"nested_explanation",
           {"schema_version", "dataset_id", "instance_id", "model_id",
            "method_id", "predicted_class", "tokens", "scores"}},
      };
  return *fields;
}

// Record types produced by this tool that may share a file with corpus
// records; they are skipped.
bool is_ignored_record_type(std::string_view type) {
  return type == "perturbation_plan" || type == "metric_report" ||
         type == "plot_point";
}

const json& require(const json& o, std::string_view field) {
  auto it = o.find(field);
  if (it == o.end()) {
    throw LineError{"MissingField", fmt::format("missing field '{}'", field)};
  }
  return *it;
}

std::string get_string(const json& o, std::string_view field) {
  const json& v = require(o, field);
  if (!v.is_string()) {
    throw LineError{"InvalidField",
                    fmt::format("field '{}' must be a string", field)};
  }
  return v.get<std::string>();
}

std::vector<double> get_numbers(const json& v, std::string_view field) {
  if (!v.is_array()) {
    throw LineError{"InvalidField",
                    fmt::format("field '{}' must be an array of numbers",
                                field)};
  }
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (!x.is_number()) {
      throw LineError{"InvalidField",
                      fmt::format("field '{}' must hold numbers only", field)};
    }
    out.push_back(x.get<double>());
  }
  return out;
}

std::vector<std::string> get_strings(const json& v, std::string_view field) {
  if (!v.is_array()) {
    throw LineError{"InvalidField",
                    fmt::format("field '{}' must be an array of strings",
                                field)};
  }
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (!x.is_string()) {
      throw LineError{"InvalidField",
                      fmt::format("field '{}' must hold strings only", field)};
    }
    out.push_back(x.get<std::string>());
  }
  return out;
}

void check_schema_version(const json& o, bool required) {
  auto it = o.find("schema_version");
  if (it == o.end()) {
    if (required) {
      throw LineError{"MissingField", "missing field 'schema_version'"};
    }
    return;
  }
  if (!it->is_number_integer()) {
    throw LineError{"InvalidField", "schema_version must be an integer"};
  }
  if (it->get<int>() != kSchemaVersion) {
    throw LineError{"SchemaVersionUnsupported",
                    fmt::format("schema_version {} unsupported (expected {})",
                                it->get<int>(), kSchemaVersion)};
  }
}

void warn_unknown_fields(const json& o, std::string_view type,
                         const RecordLocator& where,
                         std::vector<ValidationIssue>& issues) {
  const auto& known = known_fields().find(type)->second;
  for (auto it = o.begin(); it != o.end(); ++it) {
    if (!known.contains(it.key())) {
      issues.push_back({Severity::kWarning, where, "UnknownField",
                        fmt::format("unknown field '{}' in {} record",
                                    it.key(), type)});
    }
  }
}

void check_explanation(const ExplanationRecord& r) {
  if (r.tokens.size() != r.scores.size()) {
    throw LineError{"LengthMismatch",
                    fmt::format("length mismatch: {} tokens, {} scores",
                                r.tokens.size(), r.scores.size())};
  }
  if (r.tokens.empty()) {
    throw LineError{"EmptyTokens", "explanation has no tokens"};
  }
}

// Shared by top-level explanation lines and explanations nested in pairs.
// Nested objects inherit missing identity fields from the enclosing pair.
ExplanationRecord parse_explanation(const json& o, const json* parent) {
  ExplanationRecord r;
  check_schema_version(o, parent == nullptr);
  auto id_field = [&](std::string_view field) {
    if (parent != nullptr && !o.contains(field)) {
      return get_string(*parent, field);
    }
    return get_string(o, field);
  };
  r.dataset_id = id_field("dataset_id");
  r.instance_id = id_field("instance_id");
  r.model_id = id_field("model_id");
  r.method_id = id_field("method_id");
  r.predicted_class = get_string(o, "predicted_class");
  r.tokens = get_strings(require(o, "tokens"), "tokens");
  for (auto& t : r.tokens) t = normalize_word(t);
  r.scores = get_numbers(require(o, "scores"), "scores");
  check_explanation(r);
  if (parent != nullptr) {
    for (std::string_view f : {"dataset_id", "instance_id", "model_id",
                               "method_id"}) {
      if (get_string(o.contains(f) ? o : *parent, f) !=
          get_string(*parent, f)) {
        throw LineError{"PairKeyMismatch",
                        fmt::format("nested explanation {} differs from pair",
                                    f)};
      }
    }
  }
  return r;
}

ExplanationRef parse_ref(const json& o, std::string_view inline_field,
                         std::string_view class_field,
                         const RecordLocator& where,
                         std::vector<ValidationIssue>& issues) {
  ExplanationRef ref;
  auto it = o.find(inline_field);
  if (it != o.end()) {
    if (!it->is_object()) {
      throw LineError{"InvalidField",
                      fmt::format("field '{}' must be an object",
                                  inline_field)};
    }
    warn_unknown_fields(*it, "nested_explanation", where, issues);
    ref.inline_record = parse_explanation(*it, &o);
    return ref;
  }
  if (!o.contains(class_field)) {
    throw LineError{"MissingField",
                    fmt::format("need '{}' or '{}'", inline_field,
                                class_field)};
  }
  ref.predicted_class = get_string(o, class_field);
  return ref;
}

Item parse_item(const json& o, std::string_view type, const RecordLocator& where,
                std::vector<ValidationIssue>& issues) {
  warn_unknown_fields(o, type, where, issues);
  if (type == "explanation") return parse_explanation(o, nullptr);

  check_schema_version(o, false);
  if (type == "annotation") {
    RationaleAnnotation a;
    a.dataset_id = get_string(o, "dataset_id");
    a.instance_id = get_string(o, "instance_id");
    a.annotator_id = get_string(o, "annotator_id");
    for (auto& w : get_strings(require(o, "rationale_words"),
                               "rationale_words")) {
      std::string canonical = normalize_word(w);
      if (!canonical.empty()) a.rationale_words.insert(std::move(canonical));
    }
    if (a.rationale_words.empty()) {
      throw LineError{"EmptyRationale", "rationale_words is empty"};
    }
    return a;
  }
  if (type == "attention") {
    AttentionSummary s;
    s.dataset_id = get_string(o, "dataset_id");
    s.instance_id = get_string(o, "instance_id");
    s.model_id = get_string(o, "model_id");
    s.seed_id = get_string(o, "seed_id");
    const json& vectors = require(o, "per_token_attention");
    if (!vectors.is_array() || vectors.empty()) {
      throw LineError{"InvalidField",
                      "per_token_attention must be a non-empty array"};
    }
    if (vectors.front().is_number()) {
      s.per_token_attention.push_back(
          get_numbers(vectors, "per_token_attention"));
    } else {
      for (const auto& layer : vectors) {
        s.per_token_attention.push_back(
            get_numbers(layer, "per_token_attention"));
      }
    }
    if (auto it = o.find("layers"); it != o.end()) {
      if (!it->is_number_integer() || it->get<int>() != s.layers()) {
        throw LineError{"LayerCountMismatch",
                        fmt::format("layers = {} but {} vectors given",
                                    it->dump(), s.layers())};
      }
    }
    try {
      validate(s);
    } catch (const Error& e) {
      throw LineError{e.code() == ErrorCode::kLengthMismatch
                          ? "AttentionLengthMismatch"
                          : "InvalidAttention",
                      e.what()};
    }
    return s;
  }
  if (type == "perturbation_pair") {
    PendingPerturbation p;
    p.dataset_id = get_string(o, "dataset_id");
    p.instance_id = get_string(o, "instance_id");
    p.model_id = get_string(o, "model_id");
    p.method_id = get_string(o, "method_id");
    const std::string kind = get_string(o, "perturbation_kind");
    auto parsed = parse_perturbation_kind(kind);
    if (!parsed) {
      throw LineError{"InvalidField",
                      fmt::format("unknown perturbation_kind '{}'", kind)};
    }
    p.kind = *parsed;
    for (double m : get_numbers(require(o, "relevance_mask"),
                                "relevance_mask")) {
      if (m != 0.0 && m != 1.0) {
        throw LineError{"InvalidField", "relevance_mask entries must be 0/1"};
      }
      p.mask.push_back(static_cast<int>(m));
    }
    p.original = parse_ref(o, "original", "original_class", where, issues);
    const json& perturbed = require(o, "perturbed");
    if (!perturbed.is_object()) {
      throw LineError{"InvalidField", "field 'perturbed' must be an object"};
    }
    warn_unknown_fields(perturbed, "nested_explanation", where, issues);
    p.perturbed = parse_explanation(perturbed, &o);
    return p;
  }
  // class_contrast_pair
  PendingContrast c;
  c.dataset_id = get_string(o, "dataset_id");
  c.instance_id = get_string(o, "instance_id");
  c.model_id = get_string(o, "model_id");
  c.method_id = get_string(o, "method_id");
  c.p = parse_ref(o, "explanation_p", "class_p", where, issues);
  c.q = parse_ref(o, "explanation_q", "class_q", where, issues);
  return c;
}

ParsedSource parse_source(const SourceText& source) {
  ParsedSource out;
  std::istringstream in(source.content);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    const RecordLocator where{source.name, line_no};
    try {
      json o = json::parse(line);
      if (!o.is_object()) throw LineError{"ParseError", "line is not an object"};
      const std::string type = get_string(o, "record_type");
      if (is_ignored_record_type(type)) {
        out.issues.push_back({Severity::kWarning, where, "IgnoredRecordType",
                              fmt::format("record_type '{}' is not part of "
                                          "a corpus; skipped",
                                          type)});
        continue;
      }
      if (!known_fields().contains(type) || type == "nested_explanation") {
        throw LineError{"UnknownRecordType",
                        fmt::format("unknown record_type '{}'", type)};
      }
      out.items.push_back({where, parse_item(o, type, where, out.issues)});
    } catch (const json::exception& e) {
      out.issues.push_back({Severity::kError, where, "ParseError",
                            fmt::format("malformed line: {}", e.what())});
    } catch (const LineError& e) {
      out.issues.push_back({Severity::kError, where, e.code, e.message});
    }
  }
  return out;
}

auto explanation_tie(const ExplanationRecord& r) {
  return std::tie(r.dataset_id, r.instance_id, r.model_id, r.method_id,
                  r.predicted_class, r.tokens, r.scores, r.schema_version);
}

bool same_identity(const ExplanationRecord& r, const std::string& dataset,
                   const std::string& instance, const std::string& model,
                   const std::string& method) {
  return r.dataset_id == dataset && r.instance_id == instance &&
         r.model_id == model && r.method_id == method;
}

class IndexBuilder {
 public:
  explicit IndexBuilder(const LoadOptions& options) : options_(options) {}

  void add(LocatedItem&& located) {
    std::visit([&](auto&& item) { add_item(std::move(item), located.locator); },
               std::move(located.item));
  }

  LoadResult finish() {
    merge_all_annotations();
    resolve_perturbations();
    resolve_contrasts();
    std::sort(corpus_.perturbation_pairs.begin(),
              corpus_.perturbation_pairs.end(),
              [](const auto& a, const auto& b) { return canonical_less(a, b); });
    std::sort(corpus_.contrast_pairs.begin(), corpus_.contrast_pairs.end(),
              [](const auto& a, const auto& b) { return canonical_less(a, b); });
    LoadResult result;
    result.issues = std::move(issues_);
    if (options_.lenient || result.error_count() == 0) {
      result.corpus = std::move(corpus_);
    }
    return result;
  }

  void add_issues(std::vector<ValidationIssue>&& issues) {
    for (auto& i : issues) issues_.push_back(std::move(i));
  }

 private:
  void error(const RecordLocator& where, std::string code, std::string msg) {
    issues_.push_back({Severity::kError, where, std::move(code), std::move(msg)});
  }

  // DanglingReference and MaskMismatch become warnings under --lenient.
  void pair_problem(const RecordLocator& where, std::string code,
                    std::string msg) {
    issues_.push_back({options_.lenient ? Severity::kWarning : Severity::kError,
                       where, std::move(code), std::move(msg)});
  }

  void add_item(ExplanationRecord&& r, const RecordLocator& where) {
    auto key = key_of(r);
    if (corpus_.explanations.contains(key)) {
      error(where, "DuplicateKey",
            fmt::format("duplicate explanation ({}, {}, {}, {}, {})",
                        key.dataset_id, key.instance_id, key.model_id,
                        key.method_id, key.predicted_class));
      return;
    }
    corpus_.explanations.emplace(std::move(key), std::move(r));
  }

  void add_item(RationaleAnnotation&& a, const RecordLocator& where) {
    auto& bucket = raw_annotations_[{a.dataset_id, a.instance_id}];
    for (const auto& [existing, loc] : bucket) {
      if (existing.annotator_id == a.annotator_id) {
        error(where, "DuplicateKey",
              fmt::format("annotator '{}' appears twice for ({}, {})",
                          a.annotator_id, a.dataset_id, a.instance_id));
        return;
      }
    }
    bucket.emplace_back(std::move(a), where);
  }

  void add_item(AttentionSummary&& s, const RecordLocator& where) {
    AttentionKey key{s.dataset_id, s.instance_id, s.model_id, s.seed_id};
    if (corpus_.attention.contains(key)) {
      error(where, "DuplicateKey",
            fmt::format("duplicate attention ({}, {}, {}, {})", key.dataset_id,
                        key.instance_id, key.model_id, key.seed_id));
      return;
    }
    corpus_.attention.emplace(std::move(key), std::move(s));
  }

  void add_item(PendingPerturbation&& p, const RecordLocator& where) {
    pending_perturbations_.emplace_back(std::move(p), where);
  }

  void add_item(PendingContrast&& c, const RecordLocator& where) {
    pending_contrasts_.emplace_back(std::move(c), where);
  }

  void merge_all_annotations() {
    for (auto& [key, bucket] : raw_annotations_) {
      std::vector<RationaleAnnotation> inputs;
      for (const auto& [a, loc] : bucket) inputs.push_back(a);
      const RecordLocator& where = bucket.front().second;
      try {
        corpus_.annotations.emplace(key, merge_annotations(inputs));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kEmptyAfterMerge) throw;
        if (options_.annotation_fallback == AnnotationFallback::kUnion) {
          issues_.push_back({Severity::kWarning, where, "EmptyAfterMerge",
                             fmt::format("no majority for ({}, {}); using "
                                         "the union of annotators",
                                         key.first, key.second)});
          corpus_.annotations.emplace(key, union_annotations(inputs));
        } else {
          error(where, "EmptyAfterMerge",
                fmt::format("no word has a majority for ({}, {})", key.first,
                            key.second));
        }
      }
    }
  }

  std::optional<ExplanationRecord> resolve(const ExplanationRef& ref,
                                           const std::string& dataset,
                                           const std::string& instance,
                                           const std::string& model,
                                           const std::string& method) {
    if (ref.inline_record) return ref.inline_record;
    auto it = corpus_.explanations.find(
        ExplanationKey{dataset, instance, model, method, ref.predicted_class});
    if (it == corpus_.explanations.end()) return std::nullopt;
    return it->second;
  }

  void resolve_perturbations() {
    for (auto& [p, where] : pending_perturbations_) {
      auto original = resolve(p.original, p.dataset_id, p.instance_id,
                              p.model_id, p.method_id);
      if (!original) {
        pair_problem(where, "DanglingReference",
                     fmt::format("perturbation pair references missing "
                                 "explanation ({}, {}, {}, {}, {})",
                                 p.dataset_id, p.instance_id, p.model_id,
                                 p.method_id, p.original.predicted_class));
        continue;
      }
      if (!same_identity(*original, p.dataset_id, p.instance_id, p.model_id,
                         p.method_id) ||
          !same_identity(p.perturbed, p.dataset_id, p.instance_id, p.model_id,
                         p.method_id)) {
        error(where, "PairKeyMismatch",
              "original and perturbed must share dataset, instance, model "
              "and method");
        continue;
      }
      const auto recomputed = compute_relevance_mask(*original, p.perturbed);
      if (recomputed != p.mask) {
        std::string detail;
        if (recomputed.size() != p.mask.size()) {
          detail = fmt::format("stored mask has {} entries, original has {} "
                               "words",
                               p.mask.size(), recomputed.size());
        } else {
          for (std::size_t k = 0; k < recomputed.size(); ++k) {
            if (recomputed[k] != p.mask[k]) {
              detail = fmt::format("word {} ('{}') stored {} but recomputed {}",
                                   k, original->tokens[k], p.mask[k],
                                   recomputed[k]);
              break;
            }
          }
        }
        pair_problem(where, "MaskMismatch",
                     fmt::format("relevance mask mismatch: {}", detail));
        continue;
      }
      corpus_.perturbation_pairs.push_back(
          {std::move(*original), std::move(p.perturbed), p.kind,
           std::move(p.mask)});
    }
  }

  void resolve_contrasts() {
    for (auto& [c, where] : pending_contrasts_) {
      auto p = resolve(c.p, c.dataset_id, c.instance_id, c.model_id,
                       c.method_id);
      auto q = resolve(c.q, c.dataset_id, c.instance_id, c.model_id,
                       c.method_id);
      if (!p || !q) {
        pair_problem(where, "DanglingReference",
                     fmt::format("class contrast pair references missing "
                                 "explanation for ({}, {}, {}, {})",
                                 c.dataset_id, c.instance_id, c.model_id,
                                 c.method_id));
        continue;
      }
      if (!same_identity(*p, c.dataset_id, c.instance_id, c.model_id,
                         c.method_id) ||
          !same_identity(*q, c.dataset_id, c.instance_id, c.model_id,
                         c.method_id)) {
        error(where, "PairKeyMismatch",
              "contrast explanations must share the pair's identity");
        continue;
      }
      if (p->predicted_class == q->predicted_class) {
        error(where, "ClassNotDistinct",
              fmt::format("both explanations are for class '{}'",
                          p->predicted_class));
        continue;
      }
      if (p->tokens != q->tokens) {
        error(where, "TokenOrderMismatch",
              "contrast explanations must share the same token list");
        continue;
      }
      corpus_.contrast_pairs.push_back({c.dataset_id, c.instance_id,
                                        c.model_id, c.method_id,
                                        std::move(*p), std::move(*q)});
    }
  }

  LoadOptions options_;
  CorpusIndex corpus_;
  std::vector<ValidationIssue> issues_;
  std::map<InstanceKey,
           std::vector<std::pair<RationaleAnnotation, RecordLocator>>>
      raw_annotations_;
  std::vector<std::pair<PendingPerturbation, RecordLocator>>
      pending_perturbations_;
  std::vector<std::pair<PendingContrast, RecordLocator>> pending_contrasts_;
};

bool issue_less(const ValidationIssue& a, const ValidationIssue& b) {
  return std::tie(a.locator, a.code, a.message, a.severity) <
         std::tie(b.locator, b.code, b.message, b.severity);
}

}  // namespace

std::string format_issue(const ValidationIssue& issue) {
  return fmt::format("{}:{}: {} {}: {}", issue.locator.file,
                     issue.locator.line,
                     issue.severity == Severity::kError ? "error" : "warning",
                     issue.code, issue.message);
}

std::size_t LoadResult::error_count() const {
  return static_cast<std::size_t>(
      std::count_if(issues.begin(), issues.end(), [](const auto& i) {
        return i.severity == Severity::kError;
      }));
}

std::size_t LoadResult::warning_count() const {
  return issues.size() - error_count();
}

LoadResult load_corpus(std::span<const SourceText> sources,
                       const LoadOptions& options) {
  // Processing order is fixed by source name so that argument order never
  // changes which duplicate wins.
  std::vector<const SourceText*> ordered;
  for (const auto& s : sources) ordered.push_back(&s);
  std::sort(ordered.begin(), ordered.end(), [](const auto* a, const auto* b) {
    return std::tie(a->name, a->content) < std::tie(b->name, b->content);
  });

  std::vector<ParsedSource> parsed(ordered.size());
  parallel_for(ordered.size(), options.jobs,
               [&](std::size_t i) { parsed[i] = parse_source(*ordered[i]); });

  IndexBuilder builder(options);
  for (auto& p : parsed) {
    builder.add_issues(std::move(p.issues));
    for (auto& item : p.items) builder.add(std::move(item));
  }
  LoadResult result = builder.finish();
  std::sort(result.issues.begin(), result.issues.end(), issue_less);
  return result;
}

LoadResult load_corpus(std::span<const std::filesystem::path> paths,
                       const LoadOptions& options) {
  std::vector<SourceText> sources;
  std::vector<ValidationIssue> io_issues;
  for (const auto& path : paths) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      io_issues.push_back({Severity::kError, {path.string(), 0}, "IoError",
                           "cannot open file"});
      continue;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    sources.push_back({path.string(), buffer.str()});
  }
  LoadResult result = load_corpus(std::span<const SourceText>(sources), options);
  if (!io_issues.empty()) {
    for (auto& i : io_issues) result.issues.push_back(std::move(i));
    std::sort(result.issues.begin(), result.issues.end(), issue_less);
    if (!options.lenient) result.corpus.reset();
  }
  return result;
}

RationaleAnnotation merge_annotations(
    std::span<const RationaleAnnotation> annotations) {
  if (annotations.empty()) {
    throw Error(ErrorCode::kEmptyInput, "no annotations to merge");
  }
  const auto& first = annotations.front();
  std::map<std::string, std::size_t> votes;
  for (const auto& a : annotations) {
    if (a.dataset_id != first.dataset_id ||
        a.instance_id != first.instance_id) {
      throw Error(ErrorCode::kInstanceMismatch,
                  "annotations to merge describe different instances");
    }
    for (const auto& w : a.rationale_words) ++votes[w];
  }
  RationaleAnnotation merged{first.dataset_id, first.instance_id, "merged", {}};
  for (const auto& [word, count] : votes) {
    if (2 * count > annotations.size()) merged.rationale_words.insert(word);
  }
  if (merged.rationale_words.empty()) {
    throw Error(ErrorCode::kEmptyAfterMerge,
                fmt::format("no majority rationale for ({}, {})",
                            first.dataset_id, first.instance_id));
  }
  return merged;
}

RationaleAnnotation union_annotations(
    std::span<const RationaleAnnotation> annotations) {
  if (annotations.empty()) {
    throw Error(ErrorCode::kEmptyInput, "no annotations to merge");
  }
  RationaleAnnotation merged{annotations.front().dataset_id,
                             annotations.front().instance_id, "merged", {}};
  for (const auto& a : annotations) {
    if (a.dataset_id != merged.dataset_id ||
        a.instance_id != merged.instance_id) {
      throw Error(ErrorCode::kInstanceMismatch,
                  "annotations to merge describe different instances");
    }
    merged.rationale_words.insert(a.rationale_words.begin(),
                                  a.rationale_words.end());
  }
  return merged;
}

const ExplanationRecord* find_explanation(const CorpusIndex& corpus,
                                          std::string_view dataset_id,
                                          std::string_view instance_id,
                                          std::string_view model_id,
                                          std::string_view method_id,
                                          std::string_view predicted_class) {
  ExplanationKey probe{std::string(dataset_id), std::string(instance_id),
                       std::string(model_id), std::string(method_id),
                       std::string(predicted_class)};
  if (!predicted_class.empty()) {
    auto it = corpus.explanations.find(probe);
    return it == corpus.explanations.end() ? nullptr : &it->second;
  }
  auto it = corpus.explanations.lower_bound(probe);
  if (it == corpus.explanations.end()) return nullptr;
  const auto& k = it->first;
  if (k.dataset_id != dataset_id || k.instance_id != instance_id ||
      k.model_id != model_id || k.method_id != method_id) {
    return nullptr;
  }
  return &it->second;
}

bool canonical_less(const PerturbationPair& a, const PerturbationPair& b) {
  const auto ka = std::tuple_cat(
      std::tie(a.original.dataset_id, a.original.instance_id,
               a.original.model_id, a.original.method_id,
               a.perturbation_kind),
      explanation_tie(a.original), explanation_tie(a.perturbed),
      std::tie(a.relevance_mask));
  const auto kb = std::tuple_cat(
      std::tie(b.original.dataset_id, b.original.instance_id,
               b.original.model_id, b.original.method_id,
               b.perturbation_kind),
      explanation_tie(b.original), explanation_tie(b.perturbed),
      std::tie(b.relevance_mask));
  return ka < kb;
}

bool canonical_less(const ClassContrastPair& a, const ClassContrastPair& b) {
  const auto ka = std::tuple_cat(
      std::tie(a.dataset_id, a.instance_id, a.model_id, a.method_id),
      explanation_tie(a.explanation_p), explanation_tie(a.explanation_q));
  const auto kb = std::tuple_cat(
      std::tie(b.dataset_id, b.instance_id, b.model_id, b.method_id),
      explanation_tie(b.explanation_p), explanation_tie(b.explanation_q));
  return ka < kb;
}

}  // namespace xaieval
