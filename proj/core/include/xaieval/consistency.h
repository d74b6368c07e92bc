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

#ifndef XAIEVAL_CONSISTENCY_H_
#define XAIEVAL_CONSISTENCY_H_

// Cross-seed consistency: do models whose attention differs more also
// produce explanations that differ more?

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "xaieval/ingest.h"
#include "xaieval/types.h"

namespace xaieval {

enum class DistanceKind { kCosine, kEuclidean };

std::string_view to_string(DistanceKind kind);
std::optional<DistanceKind> parse_distance_kind(std::string_view text);

// Element-wise mean over layers.
std::vector<double> average_attention(const AttentionSummary& summary);

// Cosine distance (1 - cos) or Euclidean distance. Throws
// Error(kLengthMismatch), or Error(kZeroVector) for cosine on a zero vector.
double vector_distance(std::span<const double> u, std::span<const double> v,
                       DistanceKind kind);

// 1-based ranks; tied values share the average of their positions.
std::vector<double> average_ranks(std::span<const double> values);

// Pearson correlation of the average-rank vectors. Throws
// Error(kLengthMismatch) for unequal or too short (< 3) series and
// Error(kDegenerateSeries) when either series is constant.
double spearman_rho(std::span<const double> xs, std::span<const double> ys);

// Explanation records of a seed variant are stored under this model id.
std::string seeded_model_id(std::string_view model_id,
                            std::string_view seed_id);

struct InstanceDistance {
  std::string instance_id;
  double d_attention = 0.0;
  double d_explanation = 0.0;
};

struct ConsistencyResult {
  std::pair<std::string, std::string> model_pair;  // seed ids
  std::string model_id;
  std::string method_id;
  std::optional<double> rho;  // absent when a distance series is constant
  int n_instances = 0;
  std::vector<InstanceDistance> per_instance;
};

struct ConsistencyQuery {
  std::string dataset_id;
  std::string model_id;
  std::string seed_a;
  std::string seed_b;
  std::string method_id;
  DistanceKind distance = DistanceKind::kCosine;
  // Explanation class to use when several exist; empty picks the smallest.
  std::string predicted_class;
  int jobs = 1;
};

// Distances per instance having attention and explanations for both seeds,
// then rho over the instance series. Explanations are compared after L1
// normalization. Throws Error(kInsufficientInstances) for fewer than three
// usable instances and Error(kAlignmentError) when token counts differ
// between seeds.
ConsistencyResult consistency(const CorpusIndex& corpus,
                              const ConsistencyQuery& query);

}  // namespace xaieval

#endif  // XAIEVAL_CONSISTENCY_H_
