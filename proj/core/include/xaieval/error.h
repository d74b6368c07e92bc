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

#ifndef XAIEVAL_ERROR_H_
#define XAIEVAL_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace xaieval {

enum class ErrorCode {
  kInvalidArgument,
  kAllZeroScores,
  kTopNOutOfRange,
  kInstanceMismatch,
  kEmptyInput,
  kFractionOutOfRange,
  kIndexOutOfRange,
  kLengthMismatch,
  kZeroVector,
  kDegenerateSeries,
  kInsufficientInstances,
  kAlignmentError,
  kNotADistribution,
  kTokenOrderMismatch,
  kWeightInvalid,
  kFixtureIncomplete,
  kInconsistentGrid,
  kEmptyAfterMerge,
  kParseError,
  kIoError,
};

std::string_view error_code_name(ErrorCode code);

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Collects non-fatal warnings (clamped inputs, skipped instances) so callers
// decide where they go.
struct Diagnostics {
  std::vector<std::string> warnings;

  void warn(std::string message) { warnings.push_back(std::move(message)); }
};

}  // namespace xaieval

#endif  // XAIEVAL_ERROR_H_
