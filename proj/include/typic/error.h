// Copyright 2026 The TYPIC Toolkit Authors.
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

#ifndef TYPIC_ERROR_H_
#define TYPIC_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace typic {

// Error categories raised by the toolkit. Every failing operation throws a
// typic::Error carrying exactly one of these codes.
enum class ErrorCode {
  // Template DSL.
  kUnbalancedBraces,
  kEmptySlotName,
  kInvalidSlotName,
  kDuplicateSlot,
  kNoSlots,
  kMissingFiller,
  kExtraFiller,
  kUnknownLocale,
  kUnknownTemplate,
  // Documents and corpora.
  kSchemaError,
  kInvariantViolation,
  kDanglingReference,
  kSpanError,
  kEmptyCorpus,
  kUnknownTokenizer,
  // Metrics.
  kEmptyInput,
  kMissingRating,
  kDegenerateChance,
  kNoVariation,
  kDimensionMismatch,
  // Baselines.
  kEmptyDev,
  kNoCandidates,
  // Annotation service.
  kUnknownAnnotator,
  kUnknownProject,
  kUnknownItem,
  kRevisionConflict,
  kValidationError,
  kUnauthorized,
  // Generic.
  kInvalidArgument,
  kIoError,
};

// Stable name of an error code, e.g. "RevisionConflict".
std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace typic

#endif  // TYPIC_ERROR_H_
