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

#include "typic/fraction.h"

#include <cstdio>

namespace typic {

std::string Fraction::Percent(int decimals) const {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*f%%", decimals, value() * 100.0);
  return buffer;
}

std::string Fraction::Ratio() const {
  return std::to_string(numerator) + "/" + std::to_string(denominator);
}

nlohmann::json ToJson(const Fraction &fraction) {
  return {{"numerator", fraction.numerator},
          {"denominator", fraction.denominator},
          {"value", fraction.value()}};
}

}  // namespace typic
