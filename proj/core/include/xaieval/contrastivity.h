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

#ifndef XAIEVAL_CONTRASTIVITY_H_
#define XAIEVAL_CONTRASTIVITY_H_

#include <span>
#include <string>
#include <vector>

#include "xaieval/types.h"

namespace xaieval {

inline constexpr double kDefaultEpsilon = 1e-9;

// p_i = (|s_i| + eps) / sum_j (|s_j| + eps). Throws Error(kInvalidArgument)
// unless eps > 0.
std::vector<double> to_distribution(std::span<const double> scores,
                                    double epsilon);
std::vector<double> to_distribution(const ExplanationRecord& record,
                                    double epsilon);

// KL(p || q) in nats. Throws Error(kLengthMismatch) or
// Error(kNotADistribution) for non-positive entries or sums away from 1.
double kl_divergence(std::span<const double> p, std::span<const double> q);

struct ContrastResult {
  std::string instance_id;
  double kl = 0.0;
  double epsilon_used = 0.0;
};

struct ContrastivitySummary {
  double mean_kl = 0.0;
  std::vector<ContrastResult> per_instance;
};

// KL(target || contrast) per pair, averaged in instance order. Throws
// Error(kEmptyInput) or Error(kTokenOrderMismatch).
ContrastivitySummary contrastivity(std::span<const ClassContrastPair> pairs,
                                   double epsilon = kDefaultEpsilon);

}  // namespace xaieval

#endif  // XAIEVAL_CONTRASTIVITY_H_
