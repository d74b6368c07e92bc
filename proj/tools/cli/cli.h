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

#ifndef XAIEVAL_TOOLS_CLI_H_
#define XAIEVAL_TOOLS_CLI_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace xaieval::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDataError = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  std::string subcommand;
  std::vector<std::string> inputs;
  std::optional<int> top_n;
  std::string distance = "cosine";
  double epsilon = 1e-9;
  std::string weights = "0.25,0.25,0.25,0.25";
  double tolerance = 5e-4;
  bool strict = false;
  bool lenient = false;
  std::string annotation_fallback = "none";
  bool skip_degenerate = false;
  std::uint64_t seed = 0;
  std::string kind = "mask";
  double fraction = 0.15;
  std::string tier = "high";
  std::string model;
  std::string method;
  std::string seed_a;
  std::string seed_b;
  std::string predicted_class;
  std::string metric = "cws";
  std::string format = "csv";
  bool plot = false;
  std::string dataset;
  std::vector<std::string> method_order;
  std::vector<std::string> model_order;
  std::string fixture;
  std::string output;
  int jobs = 1;
};

// Stable digest of everything that can change results. Inputs enter by
// content hash; --jobs and --output are excluded.
std::string config_digest(const RunConfig& config,
                          const std::vector<std::string>& input_hashes);

// Runs one invocation. `args` excludes the program name. Exit codes: 0 ok,
// 1 data/validation error, 2 usage error.
int run(std::span<const std::string> args, std::ostream& out,
        std::ostream& err);

}  // namespace xaieval::cli

#endif  // XAIEVAL_TOOLS_CLI_H_
