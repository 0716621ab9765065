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

#ifndef TYPIC_FRACTION_H_
#define TYPIC_FRACTION_H_

#include <cstdint>
#include <string>

#include "json.hpp"

namespace typic {

// An exact ratio kept unreduced, so 757/821 prints as 757/821.
struct Fraction {
  int64_t numerator = 0;
  int64_t denominator = 0;

  // 0 when the denominator is 0.
  double value() const {
    return denominator == 0 ? 0.0
                            : static_cast<double>(numerator) / denominator;
  }

  // "92.2%" style rendering with the given number of decimals.
  std::string Percent(int decimals = 1) const;
  // "757/821".
  std::string Ratio() const;

  bool operator==(const Fraction &other) const = default;
};

// {"numerator", "denominator", "value"}.
nlohmann::json ToJson(const Fraction &fraction);

}  // namespace typic

#endif  // TYPIC_FRACTION_H_
