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

#include "xaieval/consistency.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include <fmt/format.h>

#include "xaieval/error.h"
#include "xaieval/parallel.h"
#include "xaieval/scores.h"

namespace xaieval {

std::string_view to_string(DistanceKind kind) {
  return kind == DistanceKind::kCosine ? "cosine" : "euclidean";
}

std::optional<DistanceKind> parse_distance_kind(std::string_view text) {
  if (text == "cosine") return DistanceKind::kCosine;
  if (text == "euclidean") return DistanceKind::kEuclidean;
  return std::nullopt;
}

std::vector<double> average_attention(const AttentionSummary& summary) {
  validate(summary);
  if (summary.layers() == 1) return summary.per_token_attention.front();
  std::vector<double> mean(summary.token_count(), 0.0);
  for (const auto& layer : summary.per_token_attention) {
    for (std::size_t t = 0; t < mean.size(); ++t) mean[t] += layer[t];
  }
  const double layers = static_cast<double>(summary.layers());
  for (double& m : mean) m /= layers;
  return mean;
}

double vector_distance(std::span<const double> u, std::span<const double> v,
                       DistanceKind kind) {
  if (u.size() != v.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                fmt::format("vector lengths differ: {} vs {}", u.size(),
                            v.size()));
  }
  if (kind == DistanceKind::kEuclidean) {
    double sq = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
      const double d = u[i] - v[i];
      sq += d * d;
    }
    return std::sqrt(sq);
  }
  double dot = 0.0, uu = 0.0, vv = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    dot += u[i] * v[i];
    uu += u[i] * u[i];
    vv += v[i] * v[i];
  }
  if (uu == 0.0 || vv == 0.0) {
    throw Error(ErrorCode::kZeroVector, "cosine distance of a zero vector");
  }
  // Identical vectors are exactly 0 apart; the division below may round.
  if (std::equal(u.begin(), u.end(), v.begin())) return 0.0;
  const double cosine = std::clamp(dot / (std::sqrt(uu) * std::sqrt(vv)),
                                   -1.0, 1.0);
  return 1.0 - cosine;
}

std::vector<double> average_ranks(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return values[a] < values[b];
  });
  std::vector<double> ranks(values.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) {
      ++j;
    }
    // Positions i..j (0-based) share rank mean((i+1)..(j+1)).
    const double rank = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t t = i; t <= j; ++t) ranks[order[t]] = rank;
    i = j + 1;
  }
  return ranks;
}

double spearman_rho(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                fmt::format("series lengths differ: {} vs {}", xs.size(),
                            ys.size()));
  }
  if (xs.size() < 3) {
    throw Error(ErrorCode::kLengthMismatch,
                fmt::format("need at least 3 points, got {}", xs.size()));
  }
  const auto rx = average_ranks(xs);
  const auto ry = average_ranks(ys);
  const double n = static_cast<double>(rx.size());
  const double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / n;
  const double my = std::accumulate(ry.begin(), ry.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    const double dx = rx[i] - mx;
    const double dy = ry[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) {
    throw Error(ErrorCode::kDegenerateSeries,
                "rank correlation undefined for a constant series");
  }
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

std::string seeded_model_id(std::string_view model_id,
                            std::string_view seed_id) {
  return fmt::format("{}@{}", model_id, seed_id);
}

ConsistencyResult consistency(const CorpusIndex& corpus,
                              const ConsistencyQuery& query) {
  struct Inputs {
    std::string instance_id;
    const AttentionSummary* attention_a;
    const AttentionSummary* attention_b;
    const ExplanationRecord* explanation_a;
    const ExplanationRecord* explanation_b;
  };

  std::set<std::string> with_a;
  for (const auto& [key, summary] : corpus.attention) {
    if (key.dataset_id == query.dataset_id && key.model_id == query.model_id &&
        key.seed_id == query.seed_a) {
      with_a.insert(key.instance_id);
    }
  }
  const std::string model_a = seeded_model_id(query.model_id, query.seed_a);
  const std::string model_b = seeded_model_id(query.model_id, query.seed_b);
  std::vector<Inputs> inputs;
  for (const auto& instance : with_a) {
    auto b = corpus.attention.find(
        {query.dataset_id, instance, query.model_id, query.seed_b});
    if (b == corpus.attention.end()) continue;
    const auto* ea = find_explanation(corpus, query.dataset_id, instance,
                                      model_a, query.method_id,
                                      query.predicted_class);
    const auto* eb = find_explanation(corpus, query.dataset_id, instance,
                                      model_b, query.method_id,
                                      query.predicted_class);
    if (ea == nullptr || eb == nullptr) continue;
    const auto& a = corpus.attention.at(
        {query.dataset_id, instance, query.model_id, query.seed_a});
    inputs.push_back({instance, &a, &b->second, ea, eb});
  }
  if (inputs.size() < 3) {
    throw Error(ErrorCode::kInsufficientInstances,
                fmt::format("{} usable instances for ({}, {}, {} vs {}, {}); "
                            "need at least 3",
                            inputs.size(), query.dataset_id, query.model_id,
                            query.seed_a, query.seed_b, query.method_id));
  }

  ConsistencyResult result;
  result.model_pair = {query.seed_a, query.seed_b};
  result.model_id = query.model_id;
  result.method_id = query.method_id;
  result.per_instance.resize(inputs.size());
  parallel_for(inputs.size(), query.jobs, [&](std::size_t i) {
    const auto& in = inputs[i];
    if (in.attention_a->token_count() != in.attention_b->token_count() ||
        in.explanation_a->size() != in.explanation_b->size()) {
      throw Error(ErrorCode::kAlignmentError,
                  fmt::format("token counts differ between seeds for "
                              "instance '{}'",
                              in.instance_id));
    }
    const auto avg_a = average_attention(*in.attention_a);
    const auto avg_b = average_attention(*in.attention_b);
    const auto exp_a = normalize_scores(*in.explanation_a);
    const auto exp_b = normalize_scores(*in.explanation_b);
    result.per_instance[i] = {
        in.instance_id, vector_distance(avg_a, avg_b, query.distance),
        vector_distance(exp_a.scores, exp_b.scores, query.distance)};
  });
  result.n_instances = static_cast<int>(result.per_instance.size());

  std::vector<double> da, de;
  for (const auto& d : result.per_instance) {
    da.push_back(d.d_attention);
    de.push_back(d.d_explanation);
  }
  try {
    result.rho = spearman_rho(da, de);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kDegenerateSeries) throw;
  }
  return result;
}

}  // namespace xaieval
