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

#include "typic/agreement.h"

#include <algorithm>
#include <charconv>
#include <map>
#include <optional>

#include "typic/error.h"

namespace typic {
namespace {

// The two annotators and each item's pair of labels.
struct Paired {
  std::vector<std::pair<std::string, std::string>> pairs;
};

Paired PairRatings(const ReliabilityData &data) {
  std::vector<std::string> annotators = data.Annotators();
  if (annotators.size() != 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "expected exactly two annotators, found " +
                    std::to_string(annotators.size()));
  }
  Paired paired;
  for (const ReliabilityItem &item : data.items) {
    auto a = item.ratings.find(annotators[0]);
    auto b = item.ratings.find(annotators[1]);
    if (a == item.ratings.end() || b == item.ratings.end()) {
      throw Error(ErrorCode::kMissingRating,
                  "item " + item.id + " is not rated by both annotators");
    }
    paired.pairs.emplace_back(a->second, b->second);
  }
  return paired;
}

std::optional<double> ParseNumber(const std::string &text) {
  double value = 0.0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) return std::nullopt;
  return value;
}

// Rank of each distinct value for the ordinal metric.
std::map<std::string, size_t> RankValues(
    const std::map<std::string, int64_t> &counts,
    const std::vector<std::string> &value_order) {
  std::vector<std::string> values;
  for (const auto &[value, count] : counts) values.push_back(value);
  if (!value_order.empty()) {
    std::map<std::string, size_t> position;
    for (size_t i = 0; i < value_order.size(); ++i) position[value_order[i]] = i;
    for (const std::string &value : values) {
      if (!position.contains(value)) {
        throw Error(ErrorCode::kInvalidArgument,
                    "value '" + value + "' missing from the ordinal order");
      }
    }
    std::sort(values.begin(), values.end(),
              [&](const auto &a, const auto &b) {
                return position[a] < position[b];
              });
  } else {
    bool numeric = std::all_of(values.begin(), values.end(), [](const auto &v) {
      return ParseNumber(v).has_value();
    });
    if (numeric) {
      std::sort(values.begin(), values.end(), [](const auto &a, const auto &b) {
        return *ParseNumber(a) < *ParseNumber(b);
      });
    }
  }
  std::map<std::string, size_t> rank;
  for (size_t i = 0; i < values.size(); ++i) rank[values[i]] = i;
  return rank;
}

}  // namespace

KappaResult CohenKappa(const ReliabilityData &data) {
  Paired paired = PairRatings(data);
  const int64_t n = static_cast<int64_t>(paired.pairs.size());
  if (n < 2) {
    throw Error(ErrorCode::kEmptyInput, "kappa needs at least two items");
  }
  int64_t agree = 0;
  std::map<std::string, std::pair<int64_t, int64_t>> marginals;
  for (const auto &[a, b] : paired.pairs) {
    if (a == b) ++agree;
    ++marginals[a].first;
    ++marginals[b].second;
  }
  int64_t chance = 0;  // sum of marginal products, scaled by n^2
  for (const auto &[label, counts] : marginals) {
    chance += counts.first * counts.second;
  }
  KappaResult result;
  result.items = n;
  result.observed = static_cast<double>(agree) / static_cast<double>(n);
  result.chance = static_cast<double>(chance) / static_cast<double>(n * n);
  if (chance == n * n) {
    if (agree != n) {
      throw Error(ErrorCode::kDegenerateChance,
                  "chance agreement is 1 but observed agreement is not");
    }
    result.kappa = 1.0;
    return result;
  }
  result.kappa = static_cast<double>(agree * n - chance) /
                 static_cast<double>(n * n - chance);
  return result;
}

AlphaResult KrippendorffAlpha(const ReliabilityData &data, Distance distance,
                              const std::vector<std::string> &value_order) {
  // Coincidences o[c][k], accumulated per pairable unit.
  std::map<std::string, std::map<std::string, double>> coincidence;
  std::map<std::string, int64_t> totals;  // n_c
  AlphaResult result;
  for (const ReliabilityItem &item : data.items) {
    const int64_t m = static_cast<int64_t>(item.ratings.size());
    if (m < 2) continue;
    ++result.units;
    std::map<std::string, int64_t> counts;
    for (const auto &[annotator, value] : item.ratings) ++counts[value];
    for (const auto &[c, nc] : counts) {
      totals[c] += nc;
      for (const auto &[k, nk] : counts) {
        double pairs = c == k ? static_cast<double>(nc * (nc - 1))
                              : static_cast<double>(nc * nk);
        coincidence[c][k] += pairs / static_cast<double>(m - 1);
      }
    }
  }
  int64_t n = 0;
  for (const auto &[value, count] : totals) n += count;
  result.pairable_values = n;
  if (n < 2) {
    throw Error(ErrorCode::kEmptyInput, "alpha needs pairable values");
  }

  std::map<std::string, size_t> rank;
  std::vector<int64_t> ranked_totals;
  if (distance == Distance::kOrdinal) {
    rank = RankValues(totals, value_order);
    ranked_totals.resize(rank.size());
    for (const auto &[value, r] : rank) ranked_totals[r] = totals.at(value);
  }
  auto delta = [&](const std::string &c, const std::string &k) -> double {
    if (c == k) return 0.0;
    if (distance == Distance::kNominal) return 1.0;
    size_t lo = std::min(rank.at(c), rank.at(k));
    size_t hi = std::max(rank.at(c), rank.at(k));
    double sum = 0.0;
    for (size_t g = lo; g <= hi; ++g) sum += static_cast<double>(ranked_totals[g]);
    sum -= (static_cast<double>(ranked_totals[lo]) +
            static_cast<double>(ranked_totals[hi])) / 2.0;
    return sum * sum;
  };

  double observed = 0.0;
  for (const auto &[c, row] : coincidence) {
    for (const auto &[k, o] : row) observed += o * delta(c, k);
  }
  double expected = 0.0;
  for (const auto &[c, nc] : totals) {
    for (const auto &[k, nk] : totals) {
      expected += static_cast<double>(nc) * static_cast<double>(nk) * delta(c, k);
    }
  }
  result.observed_disagreement = observed / static_cast<double>(n);
  result.expected_disagreement =
      expected / (static_cast<double>(n) * static_cast<double>(n - 1));
  if (result.expected_disagreement == 0.0) {
    throw Error(ErrorCode::kNoVariation,
                "expected disagreement is zero; alpha is undefined");
  }
  result.alpha =
      1.0 - result.observed_disagreement / result.expected_disagreement;
  return result;
}

Fraction PercentAgreement(const ReliabilityData &data) {
  Paired paired = PairRatings(data);
  if (paired.pairs.empty()) {
    throw Error(ErrorCode::kEmptyInput, "no items to compare");
  }
  int64_t agree = 0;
  for (const auto &[a, b] : paired.pairs) agree += a == b ? 1 : 0;
  return {agree, static_cast<int64_t>(paired.pairs.size())};
}

nlohmann::json ToJson(const KappaResult &result) {
  return {{"kappa", result.kappa},
          {"observed_agreement", result.observed},
          {"chance_agreement", result.chance},
          {"items", result.items}};
}

nlohmann::json ToJson(const AlphaResult &result) {
  return {{"alpha", result.alpha},
          {"observed_disagreement", result.observed_disagreement},
          {"expected_disagreement", result.expected_disagreement},
          {"pairable_values", result.pairable_values},
          {"units", result.units}};
}

}  // namespace typic
