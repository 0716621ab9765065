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

#ifndef TYPIC_MULTILABEL_H_
#define TYPIC_MULTILABEL_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "typic/template.h"
#include "typic/tokenizer.h"

namespace typic {

// Template-selection output: bit i says whether the i-th template of the
// set applies. An all-zero vector is a valid (empty) prediction.
class LabelVector {
 public:
  LabelVector() = default;
  explicit LabelVector(size_t dimension) : bits_(dimension, 0) {}

  // Template ids to bits; NotApplicable and unknown ids are ignored.
  static LabelVector FromLabels(const TemplateSet &templates,
                                std::span<const Label> labels);

  size_t dimension() const { return bits_.size(); }
  bool test(size_t i) const { return bits_[i] != 0; }
  void set(size_t i, bool value = true) { bits_[i] = value ? 1 : 0; }
  size_t count() const;

  // Template ids of the set bits, in template-set order.
  std::vector<std::string> Ids(const TemplateSet &templates) const;

  bool operator==(const LabelVector &other) const = default;

 private:
  std::vector<uint8_t> bits_;
};

struct PrecisionRecall {
  int64_t tp = 0;
  int64_t fp = 0;
  int64_t fn = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// Scores from raw counts. A ratio with zero denominator is 1 when the
// label is absent from both gold and prediction (nothing to find, nothing
// claimed) and 0 otherwise.
PrecisionRecall ScoreCounts(int64_t tp, int64_t fp, int64_t fn);

struct MultilabelReport {
  int64_t instances = 0;
  double subset_accuracy = 0.0;   // exact vector match rate
  double example_accuracy = 0.0;  // mean |gold & pred| / |gold | pred|
  PrecisionRecall micro;
  double macro_f1 = 0.0;
  std::vector<PrecisionRecall> per_label;
};

// Errors: kDimensionMismatch (list lengths or vector dimensions differ),
// kEmptyInput.
MultilabelReport MultilabelEval(std::span<const LabelVector> gold,
                                std::span<const LabelVector> pred);

struct SlotOverlapScore {
  bool exact_match = false;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// Bag-of-n-gram overlap between a predicted and a gold filler after case
// folding and punctuation stripping. Errors: kEmptyInput, kInvalidArgument
// (n < 1).
SlotOverlapScore SlotOverlap(std::string_view pred, std::string_view gold,
                             const Tokenizer &tokenizer, int n = 1);
// Throws Error(kUnknownTokenizer) as well.
SlotOverlapScore SlotOverlap(std::string_view pred, std::string_view gold,
                             std::string_view tokenizer_id, int n = 1);

nlohmann::json ToJson(const PrecisionRecall &pr);
// Per-label entries are keyed by template id.
nlohmann::json ToJson(const MultilabelReport &report,
                      const TemplateSet &templates);

}  // namespace typic

#endif  // TYPIC_MULTILABEL_H_
