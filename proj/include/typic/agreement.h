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

#ifndef TYPIC_AGREEMENT_H_
#define TYPIC_AGREEMENT_H_

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "typic/fraction.h"
#include "typic/reliability.h"

namespace typic {

struct KappaResult {
  double kappa = 0.0;
  double observed = 0.0;  // p_o
  double chance = 0.0;    // p_e, product of the two annotators' marginals
  int64_t items = 0;
};

// Cohen's kappa for exactly two annotators over categorical labels.
// Errors: kInvalidArgument (not two annotators), kMissingRating (an item
// lacks one of them), kEmptyInput (fewer than two items),
// kDegenerateChance (p_e = 1 while p_o < 1; with p_o = 1 kappa is 1).
KappaResult CohenKappa(const ReliabilityData &data);

enum class Distance { kNominal, kOrdinal };

struct AlphaResult {
  double alpha = 0.0;
  double observed_disagreement = 0.0;  // D_o
  double expected_disagreement = 0.0;  // D_e
  int64_t pairable_values = 0;         // n
  int64_t units = 0;                   // units with two or more ratings
};

// Krippendorff's alpha via the coincidence matrix. Units with fewer than two
// ratings are not pairable and are ignored. The ordinal metric is
// delta(c,k) = (sum_{g=c..k} n_g - (n_c + n_k) / 2)^2 over ranked values.
//
// `value_order` ranks the values for the ordinal metric; when empty, values
// are ranked numerically if they all parse as numbers and lexicographically
// otherwise.
//
// Errors: kEmptyInput (no pairable values), kNoVariation (D_e = 0),
// kInvalidArgument (a value missing from `value_order`).
AlphaResult KrippendorffAlpha(const ReliabilityData &data, Distance distance,
                              const std::vector<std::string> &value_order = {});

// Fraction of items on which both of the two annotators agree.
// Errors: kInvalidArgument (not two annotators), kMissingRating,
// kEmptyInput.
Fraction PercentAgreement(const ReliabilityData &data);

nlohmann::json ToJson(const KappaResult &result);
nlohmann::json ToJson(const AlphaResult &result);

}  // namespace typic

#endif  // TYPIC_AGREEMENT_H_
