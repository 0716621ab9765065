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

#include "typic/error.h"

namespace typic {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnbalancedBraces: return "UnbalancedBraces";
    case ErrorCode::kEmptySlotName: return "EmptySlotName";
    case ErrorCode::kInvalidSlotName: return "InvalidSlotName";
    case ErrorCode::kDuplicateSlot: return "DuplicateSlot";
    case ErrorCode::kNoSlots: return "NoSlots";
    case ErrorCode::kMissingFiller: return "MissingFiller";
    case ErrorCode::kExtraFiller: return "ExtraFiller";
    case ErrorCode::kUnknownLocale: return "UnknownLocale";
    case ErrorCode::kUnknownTemplate: return "UnknownTemplate";
    case ErrorCode::kSchemaError: return "SchemaError";
    case ErrorCode::kInvariantViolation: return "InvariantViolation";
    case ErrorCode::kDanglingReference: return "DanglingReference";
    case ErrorCode::kSpanError: return "SpanError";
    case ErrorCode::kEmptyCorpus: return "EmptyCorpus";
    case ErrorCode::kUnknownTokenizer: return "UnknownTokenizer";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kMissingRating: return "MissingRating";
    case ErrorCode::kDegenerateChance: return "DegenerateChance";
    case ErrorCode::kNoVariation: return "NoVariation";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kEmptyDev: return "EmptyDev";
    case ErrorCode::kNoCandidates: return "NoCandidates";
    case ErrorCode::kUnknownAnnotator: return "UnknownAnnotator";
    case ErrorCode::kUnknownProject: return "UnknownProject";
    case ErrorCode::kUnknownItem: return "UnknownItem";
    case ErrorCode::kRevisionConflict: return "RevisionConflict";
    case ErrorCode::kValidationError: return "ValidationError";
    case ErrorCode::kUnauthorized: return "Unauthorized";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace typic
