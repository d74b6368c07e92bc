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

#include "cli.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "xaieval/consistency.h"
#include "xaieval/contrastivity.h"
#include "xaieval/cws.h"
#include "xaieval/digest.h"
#include "xaieval/error.h"
#include "xaieval/ha.h"
#include "xaieval/ingest.h"
#include "xaieval/paper_fixture.h"
#include "xaieval/parallel.h"
#include "xaieval/records.h"
#include "xaieval/report.h"
#include "xaieval/robustness.h"
#include "xaieval/version.h"

namespace xaieval::cli {
namespace {

using nlohmann::json;

// Thrown for bad flag values found after CLI11 parsing.
struct UsageError {
  std::string message;
};

// Thrown for unreadable or invalid inputs.
struct DataError {
  std::string message;
};

using GroupKey = std::tuple<std::string, std::string, std::string>;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError{fmt::format("{}: cannot open file", path)};
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

class Runner {
 public:
  Runner(RunConfig config, std::ostream& out, std::ostream& err)
      : config_(std::move(config)), out_(out), err_(err) {}

  int execute() {
    validate_flags();
    std::vector<std::string> hashes;
    for (const auto& path : config_.inputs) {
      hashes.push_back(sha256_hex(read_file(path)));
    }
    digest_ = config_digest(config_, hashes);
    err_ << "xaieval " << kToolVersion << " config_digest=" << digest_ << "\n";

    const auto& s = config_.subcommand;
    if (s == "validate") return run_validate();
    if (s == "ha") return run_ha();
    if (s == "robustness") return run_robustness();
    if (s == "consistency") return run_consistency();
    if (s == "contrastivity") return run_contrastivity();
    if (s == "plan") return run_plan();
    if (s == "cws") return run_cws();
    if (s == "report") return run_report();
    if (s == "verify-paper") return run_verify();
    throw UsageError{fmt::format("unknown subcommand '{}'", s)};
  }

 private:
  void validate_flags() {
    const auto& s = config_.subcommand;
    if (s != "verify-paper" && config_.inputs.empty()) {
      throw UsageError{"--input: at least one input file is required"};
    }
    if (config_.jobs < 1) throw UsageError{"--jobs must be at least 1"};
    if (config_.top_n && *config_.top_n < 1) {
      throw UsageError{"--top-k must be at least 1"};
    }
    if (!parse_distance_kind(config_.distance)) {
      throw UsageError{"--distance must be cosine or euclidean"};
    }
    if (!(config_.epsilon > 0.0)) throw UsageError{"--epsilon must be > 0"};
    if (!(config_.tolerance >= 0.0)) {
      throw UsageError{"--tolerance must be >= 0"};
    }
    try {
      weights_ = WeightVector::parse(config_.weights);
    } catch (const Error& e) {
      throw UsageError{fmt::format("--weights: {}", e.what())};
    }
    if (config_.annotation_fallback != "none" &&
        config_.annotation_fallback != "union") {
      throw UsageError{"--annotation-fallback must be none or union"};
    }
    if (!parse_perturbation_kind(config_.kind)) {
      throw UsageError{"--kind must be mask, delete or synonym"};
    }
    if (!parse_salience_tier(config_.tier)) {
      throw UsageError{"--tier must be high or low"};
    }
    if (!(config_.fraction > 0.0 && config_.fraction <= 1.0)) {
      throw UsageError{"--fraction must lie in (0, 1]"};
    }
    if (!parse_metric(config_.metric)) {
      throw UsageError{
          "--metric must be ha, robustness, consistency, contrastivity or "
          "cws"};
    }
    if (!parse_report_format(config_.format)) {
      throw UsageError{"--format must be csv or markdown"};
    }
    if (config_.seed_a.empty() != config_.seed_b.empty()) {
      throw UsageError{"--seed-a and --seed-b must be given together"};
    }
  }

  LoadOptions load_options() const {
    LoadOptions o;
    o.lenient = config_.lenient;
    o.annotation_fallback = config_.annotation_fallback == "union"
                                ? AnnotationFallback::kUnion
                                : AnnotationFallback::kNone;
    o.jobs = config_.jobs;
    return o;
  }

  LoadResult load() const {
    std::vector<std::filesystem::path> paths(config_.inputs.begin(),
                                             config_.inputs.end());
    return load_corpus(std::span<const std::filesystem::path>(paths),
                       load_options());
  }

  // Loads the corpus for a metric run. Issues go to stderr.
  CorpusIndex corpus() {
    LoadResult result = load();
    for (const auto& issue : result.issues) err_ << format_issue(issue) << "\n";
    if (!result.corpus) {
      throw DataError{fmt::format("corpus has {} error(s)",
                                  result.error_count())};
    }
    return std::move(*result.corpus);
  }

  bool selected(const std::string& model, const std::string& method) const {
    return (config_.model.empty() || config_.model == model) &&
           (config_.method.empty() || config_.method == method);
  }

  void emit(const std::string& text) {
    if (config_.output.empty()) {
      out_ << text;
      return;
    }
    std::ofstream file(config_.output, std::ios::binary | std::ios::trunc);
    if (!file) throw DataError{fmt::format("{}: cannot write", config_.output)};
    file << text;
  }

  MetricReport fragment(const GroupKey& key) const {
    MetricReport r;
    std::tie(r.dataset_id, r.model_id, r.method_id) = key;
    r.weights = weights_;
    r.tool_version = kToolVersion;
    r.config_digest = digest_;
    return r;
  }

  void emit_reports(const std::vector<MetricReport>& reports) {
    std::vector<json> lines;
    for (const auto& r : reports) lines.push_back(to_json(r));
    emit(write_lines(lines));
  }

  int finish_metric(const std::vector<MetricReport>& reports,
                    std::string_view metric) {
    if (reports.empty()) {
      err_ << "error: no " << metric << " result could be computed\n";
      return kExitDataError;
    }
    for (const auto& r : reports) {
      const auto v = r.value(*parse_metric(metric));
      auto count = r.instance_count_per_metric.find(std::string(metric));
      err_ << fmt::format("{} {} {} {}: {}", metric, r.dataset_id,
                          r.model_id, r.method_id,
                          v ? fmt::format("{:.4f}", *v) : "absent");
      if (count != r.instance_count_per_metric.end()) {
        err_ << fmt::format(" (n={})", count->second);
      }
      err_ << "\n";
    }
    emit_reports(reports);
    return kExitOk;
  }

  int run_validate() {
    LoadResult result = load();
    std::string text;
    for (const auto& issue : result.issues) text += format_issue(issue) + "\n";
    const std::size_t records = result.corpus ? result.corpus->size() : 0;
    text += fmt::format("summary: {} records, {} errors, {} warnings\n",
                        records, result.error_count(),
                        result.warning_count());
    emit(text);
    return result.error_count() == 0 ? kExitOk : kExitDataError;
  }

  int run_ha() {
    const CorpusIndex c = corpus();
    struct Task {
      GroupKey group;
      const ExplanationRecord* explanation;
      const RationaleAnnotation* rationale;
    };
    std::vector<Task> tasks;
    std::set<std::tuple<std::string, std::string, std::string, std::string>>
        seen;
    std::size_t unannotated = 0;
    for (const auto& [key, record] : c.explanations) {
      if (!selected(key.model_id, key.method_id)) continue;
      if (!seen.emplace(key.dataset_id, key.instance_id, key.model_id,
                        key.method_id)
               .second) {
        continue;
      }
      const auto* e =
          find_explanation(c, key.dataset_id, key.instance_id, key.model_id,
                           key.method_id, config_.predicted_class);
      if (e == nullptr) continue;
      auto a = c.annotations.find({key.dataset_id, key.instance_id});
      if (a == c.annotations.end()) {
        ++unannotated;
        continue;
      }
      tasks.push_back({{key.dataset_id, key.model_id, key.method_id}, e,
                       &a->second});
    }
    if (unannotated > 0) {
      err_ << fmt::format("warning: {} explanation(s) have no annotation and "
                          "were skipped\n",
                          unannotated);
    }
    std::vector<ApResult> results(tasks.size());
    parallel_for(tasks.size(), config_.jobs, [&](std::size_t i) {
      const auto& t = tasks[i];
      std::optional<int> n;
      if (config_.top_n) {
        n = std::min<int>(*config_.top_n,
                          static_cast<int>(t.explanation->size()));
      }
      results[i] = average_precision(*t.explanation, *t.rationale, n);
    });
    std::map<GroupKey, std::vector<ApResult>> groups;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      groups[tasks[i].group].push_back(std::move(results[i]));
    }
    std::vector<MetricReport> reports;
    for (const auto& [key, aps] : groups) {
      MetricReport r = fragment(key);
      r.ha = mean_average_precision(aps);
      r.instance_count_per_metric["ha"] = static_cast<int>(aps.size());
      reports.push_back(std::move(r));
    }
    return finish_metric(reports, "ha");
  }

  int run_robustness() {
    const CorpusIndex c = corpus();
    std::vector<const PerturbationPair*> pairs;
    for (const auto& p : c.perturbation_pairs) {
      if (selected(p.original.model_id, p.original.method_id)) {
        pairs.push_back(&p);
      }
    }
    std::vector<std::optional<RobustnessResult>> results(pairs.size());
    std::vector<std::string> skipped(pairs.size());
    parallel_for(pairs.size(), config_.jobs, [&](std::size_t i) {
      try {
        results[i] = average_difference(*pairs[i]);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kAllZeroScores || !config_.skip_degenerate) {
          throw;
        }
        skipped[i] = e.what();
      }
    });
    for (const auto& s : skipped) {
      if (!s.empty()) err_ << "warning: skipped pair: " << s << "\n";
    }
    std::map<GroupKey, std::vector<RobustnessResult>> groups;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (!results[i]) continue;
      const auto& o = pairs[i]->original;
      groups[{o.dataset_id, o.model_id, o.method_id}].push_back(
          std::move(*results[i]));
    }
    std::vector<MetricReport> reports;
    for (const auto& [key, ads] : groups) {
      MetricReport r = fragment(key);
      r.robustness = mean_average_difference(ads);
      r.instance_count_per_metric["robustness"] = static_cast<int>(ads.size());
      reports.push_back(std::move(r));
    }
    return finish_metric(reports, "robustness");
  }

  int run_consistency() {
    const CorpusIndex c = corpus();
    // (dataset, model) -> seeds with attention.
    std::map<std::pair<std::string, std::string>, std::set<std::string>> seeds;
    for (const auto& [key, summary] : c.attention) {
      seeds[{key.dataset_id, key.model_id}].insert(key.seed_id);
    }
    std::vector<MetricReport> reports;
    for (const auto& [dm, available] : seeds) {
      const auto& [dataset, model] = dm;
      if (!config_.model.empty() && config_.model != model) continue;
      std::string seed_a = config_.seed_a, seed_b = config_.seed_b;
      if (seed_a.empty()) {
        if (available.size() < 2) {
          err_ << fmt::format("warning: ({}, {}) has fewer than two seeds\n",
                              dataset, model);
          continue;
        }
        seed_a = *available.begin();
        seed_b = *std::next(available.begin());
      }
      const std::string model_a = seeded_model_id(model, seed_a);
      std::set<std::string> methods;
      for (const auto& [key, record] : c.explanations) {
        if (key.dataset_id == dataset && key.model_id == model_a &&
            (config_.method.empty() || config_.method == key.method_id)) {
          methods.insert(key.method_id);
        }
      }
      for (const auto& method : methods) {
        ConsistencyQuery q;
        q.dataset_id = dataset;
        q.model_id = model;
        q.seed_a = seed_a;
        q.seed_b = seed_b;
        q.method_id = method;
        q.distance = *parse_distance_kind(config_.distance);
        q.predicted_class = config_.predicted_class;
        q.jobs = config_.jobs;
        ConsistencyResult result;
        try {
          result = consistency(c, q);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::kInsufficientInstances) throw;
          err_ << "warning: " << e.what() << "\n";
          continue;
        }
        MetricReport r = fragment({dataset, model, method});
        r.consistency = result.rho;
        r.instance_count_per_metric["consistency"] = result.n_instances;
        if (!result.rho) {
          err_ << fmt::format("warning: ({}, {}, {}): distance series is "
                              "constant; consistency absent\n",
                              dataset, model, method);
        }
        reports.push_back(std::move(r));
      }
    }
    return finish_metric(reports, "consistency");
  }

  int run_contrastivity() {
    const CorpusIndex c = corpus();
    std::map<GroupKey, std::vector<ClassContrastPair>> groups;
    for (const auto& p : c.contrast_pairs) {
      if (selected(p.model_id, p.method_id)) {
        groups[{p.dataset_id, p.model_id, p.method_id}].push_back(p);
      }
    }
    std::vector<GroupKey> keys;
    for (const auto& [key, pairs] : groups) keys.push_back(key);
    std::vector<ContrastivitySummary> summaries(keys.size());
    parallel_for(keys.size(), config_.jobs, [&](std::size_t i) {
      summaries[i] = contrastivity(groups.at(keys[i]), config_.epsilon);
    });
    std::vector<MetricReport> reports;
    for (std::size_t i = 0; i < keys.size(); ++i) {
      MetricReport r = fragment(keys[i]);
      r.contrastivity = summaries[i].mean_kl;
      r.instance_count_per_metric["contrastivity"] =
          static_cast<int>(summaries[i].per_instance.size());
      reports.push_back(std::move(r));
    }
    return finish_metric(reports, "contrastivity");
  }

  int run_plan() {
    const CorpusIndex c = corpus();
    PlanOptions options;
    options.kind = *parse_perturbation_kind(config_.kind);
    options.tier = *parse_salience_tier(config_.tier);
    options.fraction = config_.fraction;
    options.seed = config_.seed;
    std::vector<const ExplanationRecord*> records;
    for (const auto& [key, record] : c.explanations) {
      if (selected(key.model_id, key.method_id) &&
          (config_.predicted_class.empty() ||
           key.predicted_class == config_.predicted_class)) {
        records.push_back(&record);
      }
    }
    std::vector<json> plans(records.size());
    parallel_for(records.size(), config_.jobs, [&](std::size_t i) {
      plans[i] = to_json(make_perturbation_plan(*records[i], options));
    });
    err_ << fmt::format("plan: {} plan(s)\n", plans.size());
    emit(write_lines(plans));
    return kExitOk;
  }

  std::vector<MetricReport> read_reports() const {
    std::vector<MetricReport> reports;
    for (const auto& path : config_.inputs) {
      try {
        for (auto& r : read_metric_reports(read_file(path), path)) {
          reports.push_back(std::move(r));
        }
      } catch (const Error& e) {
        throw DataError{e.what()};
      }
    }
    return reports;
  }

  int run_cws() {
    const auto fragments = read_reports();
    if (fragments.empty()) {
      err_ << "error: no metric_report records in input\n";
      return kExitDataError;
    }
    Diagnostics diagnostics;
    auto merged = merge_fragments(fragments, weights_, &diagnostics);
    for (const auto& w : diagnostics.warnings) err_ << "warning: " << w << "\n";
    for (auto& r : merged) {
      r.tool_version = kToolVersion;
      r.config_digest = digest_;
      if (r.cws) r.instance_count_per_metric.erase("cws");
    }
    return finish_metric(merged, "cws");
  }

  int run_report() {
    auto reports = read_reports();
    if (!config_.dataset.empty()) {
      std::erase_if(reports, [&](const MetricReport& r) {
        return r.dataset_id != config_.dataset;
      });
    }
    if (reports.empty()) {
      err_ << "error: no metric_report records to render\n";
      return kExitDataError;
    }
    const Metric metric = *parse_metric(config_.metric);
    const DisplayOrder order{config_.method_order, config_.model_order};
    if (config_.plot) {
      emit(emit_plot_data(reports, metric, order));
      return kExitOk;
    }
    std::map<std::string, std::vector<MetricReport>> by_dataset;
    for (auto& r : reports) by_dataset[r.dataset_id].push_back(std::move(r));
    const ReportFormat format = *parse_report_format(config_.format);
    if (format == ReportFormat::kCsv && by_dataset.size() > 1) {
      throw UsageError{"csv output covers one dataset; pass --dataset"};
    }
    std::string text;
    for (const auto& [dataset, subset] : by_dataset) {
      if (!text.empty()) text += "\n";
      text += render_report(subset, metric, format, order);
    }
    emit(text);
    return kExitOk;
  }

  int run_verify() {
    PaperFixture loaded;
    const PaperFixture* fixture = &embedded_paper_fixture();
    if (!config_.fixture.empty()) {
      try {
        loaded = parse_paper_fixture(read_file(config_.fixture));
      } catch (const Error& e) {
        throw DataError{fmt::format("{}: {}", config_.fixture, e.what())};
      }
      fixture = &loaded;
    }
    const auto report =
        verify_paper_tables(*fixture, weights_, config_.tolerance);
    emit(render_discrepancy_csv(report));
    std::size_t required = 0, required_ok = 0;
    for (const auto& r : report.rows) {
      required += r.required ? 1 : 0;
      required_ok += (r.required && r.match) ? 1 : 0;
    }
    err_ << fmt::format(
        "verify-paper: {} cells, {} match, {} mismatch; required cells "
        "{}/{} match (tolerance {})\n",
        report.rows.size(), report.match_count(),
        report.rows.size() - report.match_count(), required_ok, required,
        report.tolerance);
    if (config_.strict && !report.required_cells_match()) return kExitDataError;
    return kExitOk;
  }

  RunConfig config_;
  std::ostream& out_;
  std::ostream& err_;
  WeightVector weights_;
  std::string digest_;
};

void add_input_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("-i,--input,--explanations,--annotations,--attention,--pairs",
                  c.inputs, "Line-delimited record file(s)")
      ->check(CLI::ExistingFile);
  sub->add_flag("--lenient", c.lenient,
                "Downgrade dangling references and mask mismatches to "
                "warnings and drop the affected pairs");
  sub->add_option("--annotation-fallback", c.annotation_fallback,
                  "Merge used when annotators have no majority: none|union");
}

void add_common_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("-o,--output", c.output, "Output path (default stdout)");
  sub->add_option("-j,--jobs", c.jobs, "Worker threads");
}

void add_selection_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--model", c.model, "Only this model id");
  sub->add_option("--method", c.method, "Only this method id");
  sub->add_option("--class", c.predicted_class,
                  "Explanation class to use when several exist");
}

}  // namespace

std::string config_digest(const RunConfig& c,
                          const std::vector<std::string>& input_hashes) {
  std::vector<std::string> hashes = input_hashes;
  std::sort(hashes.begin(), hashes.end());
  // nlohmann::json objects serialize with sorted keys.
  json j = {
      {"subcommand", c.subcommand},
      {"inputs", hashes},
      {"top_n", c.top_n ? json(*c.top_n) : json(nullptr)},
      {"distance", c.distance},
      {"epsilon", c.epsilon},
      {"weights", c.weights},
      {"tolerance", c.tolerance},
      {"strict", c.strict},
      {"lenient", c.lenient},
      {"annotation_fallback", c.annotation_fallback},
      {"skip_degenerate", c.skip_degenerate},
      {"seed", c.seed},
      {"kind", c.kind},
      {"fraction", c.fraction},
      {"tier", c.tier},
      {"model", c.model},
      {"method", c.method},
      {"seed_a", c.seed_a},
      {"seed_b", c.seed_b},
      {"class", c.predicted_class},
      {"metric", c.metric},
      {"format", c.format},
      {"plot", c.plot},
      {"dataset", c.dataset},
      {"method_order", c.method_order},
      {"model_order", c.model_order},
      {"fixture", c.fixture.empty() ? std::string()
                                    : sha256_hex(read_file(c.fixture))},
      {"tool_version", kToolVersion},
  };
  return sha256_hex(j.dump());
}

int run(std::span<const std::string> args, std::ostream& out,
        std::ostream& err) {
  RunConfig c;
  CLI::App app{"Evaluate feature-attribution explanations", "xaieval"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  auto* validate = app.add_subcommand("validate", "Check record files");
  add_input_options(validate, c);
  add_common_options(validate, c);

  auto* ha = app.add_subcommand("ha", "Human-reasoning agreement (MAP)");
  add_input_options(ha, c);
  add_common_options(ha, c);
  add_selection_options(ha, c);
  ha->add_option("--top-k", c.top_n, "Ranked words per instance (capped at K)");

  auto* robustness =
      app.add_subcommand("robustness", "Perturbation robustness (MAD)");
  add_input_options(robustness, c);
  add_common_options(robustness, c);
  add_selection_options(robustness, c);
  robustness->add_flag("--skip-degenerate", c.skip_degenerate,
                       "Skip pairs with all-zero scores instead of failing");

  auto* consistency_cmd =
      app.add_subcommand("consistency", "Cross-seed consistency (Spearman)");
  add_input_options(consistency_cmd, c);
  add_common_options(consistency_cmd, c);
  add_selection_options(consistency_cmd, c);
  consistency_cmd->add_option("--distance", c.distance, "cosine|euclidean");
  consistency_cmd->add_option("--seed-a", c.seed_a, "First seed id");
  consistency_cmd->add_option("--seed-b", c.seed_b, "Second seed id");

  auto* contrast =
      app.add_subcommand("contrastivity", "Class-contrast KL divergence");
  add_input_options(contrast, c);
  add_common_options(contrast, c);
  add_selection_options(contrast, c);
  contrast->add_option("--epsilon", c.epsilon, "Additive smoothing");

  auto* plan = app.add_subcommand("plan", "Emit perturbation plans");
  add_input_options(plan, c);
  add_common_options(plan, c);
  add_selection_options(plan, c);
  plan->add_option("--kind", c.kind, "mask|delete|synonym");
  plan->add_option("--fraction", c.fraction, "Share of words to perturb");
  plan->add_option("--tier", c.tier, "high|low salience");
  plan->add_option("--seed", c.seed, "Seed for all plan randomness");

  auto* cws = app.add_subcommand("cws", "Merge metric fragments, add CWS");
  cws->add_option("-i,--input", c.inputs, "Metric fragment file(s)")
      ->check(CLI::ExistingFile);
  add_common_options(cws, c);
  cws->add_option("--weights", c.weights, "w_ha,w_cn,w_ct,w_r");

  auto* report = app.add_subcommand("report", "Render tables or plot data");
  report->add_option("-i,--input", c.inputs, "Metric report file(s)")
      ->check(CLI::ExistingFile);
  add_common_options(report, c);
  report->add_option("--metric", c.metric,
                     "ha|robustness|consistency|contrastivity|cws");
  report->add_option("--format", c.format, "csv|markdown");
  report->add_flag("--plot", c.plot, "Emit grouped-bar plot data instead");
  report->add_option("--dataset", c.dataset, "Only this dataset");
  report->add_option("--method-order", c.method_order, "Row order")
      ->delimiter(',');
  report->add_option("--model-order", c.model_order, "Column order")
      ->delimiter(',');

  auto* verify = app.add_subcommand(
      "verify-paper", "Recompute published CWS cells from the metric tables");
  add_common_options(verify, c);
  verify->add_option("--weights", c.weights, "w_ha,w_cn,w_ct,w_r");
  verify->add_option("--tolerance", c.tolerance, "Match tolerance");
  verify->add_flag("--strict", c.strict,
                   "Exit 1 unless every required cell matches");
  verify->add_option("--fixture", c.fixture, "Alternative fixture file")
      ->check(CLI::ExistingFile);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }
  c.subcommand = app.get_subcommands().front()->get_name();

  try {
    return Runner(std::move(c), out, err).execute();
  } catch (const UsageError& e) {
    err << "usage error: " << e.message << "\n";
    return kExitUsage;
  } catch (const DataError& e) {
    err << "error: " << e.message << "\n";
    return kExitDataError;
  } catch (const Error& e) {
    err << "error: " << error_code_name(e.code()) << ": " << e.what() << "\n";
    return kExitDataError;
  }
}

}  // namespace xaieval::cli
