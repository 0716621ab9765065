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

#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.h"
#include "test_util.h"
#include "typic/agreement.h"
#include "typic/reliability.h"

namespace typic {
namespace {

using testing::CodeOf;
using testing::MiniCorpus;
using testing::ReleaseFixture;

ReliabilityData Pairs(std::vector<std::pair<std::string, std::string>> pairs) {
  ReliabilityData data;
  for (size_t i = 0; i < pairs.size(); ++i) {
    data.items.push_back(
        {"i" + std::to_string(i), {{"a", pairs[i].first}, {"b", pairs[i].second}}});
  }
  return data;
}

TEST_CASE("kappa: worked example") {
  KappaResult r = CohenKappa(Pairs({{"A", "A"}, {"A", "B"}, {"B", "B"}, {"B", "B"}}));
  CHECK(r.observed == 0.75);
  CHECK(r.chance == 0.5);
  CHECK(r.kappa == 0.5);
  CHECK(r.items == 4);
}

TEST_CASE("kappa: identical annotators and degenerate chance") {
  CHECK(CohenKappa(Pairs({{"A", "A"}, {"B", "B"}, {"C", "C"}})).kappa == 1.0);
  CHECK(CohenKappa(Pairs({{"A", "A"}, {"A", "A"}})).kappa == 1.0);
  CHECK(CohenKappa(Pairs({{"A", "B"}, {"B", "A"}})).kappa == -1.0);
}

TEST_CASE("kappa: errors") {
  ReliabilityData missing = Pairs({{"A", "A"}, {"B", "B"}});
  missing.items[1].ratings.erase("b");
  CHECK(CodeOf([&] { CohenKappa(missing); }) == ErrorCode::kMissingRating);
  CHECK(CodeOf([] { CohenKappa(Pairs({{"A", "B"}})); }) ==
        ErrorCode::kEmptyInput);
  ReliabilityData three = Pairs({{"A", "A"}, {"B", "B"}});
  three.items[0].ratings["c"] = "A";
  CHECK(CodeOf([&] { CohenKappa(three); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("alpha: identical raters, no variation, nominal example") {
  ReliabilityData same;
  same.items = {{"u1", {{"a", "1"}, {"b", "1"}}}, {"u2", {{"a", "2"}, {"b", "2"}}}};
  CHECK(KrippendorffAlpha(same, Distance::kNominal).alpha == 1.0);
  CHECK(KrippendorffAlpha(same, Distance::kOrdinal).alpha == 1.0);

  ReliabilityData constant;
  constant.items = {{"u1", {{"a", "2"}, {"b", "2"}}}, {"u2", {{"a", "2"}}}};
  CHECK(CodeOf([&] { KrippendorffAlpha(constant, Distance::kNominal); }) ==
        ErrorCode::kNoVariation);

  // Nominal alpha on two raters and four units, counted by hand: n = 8 values
  // with marginals {1: 3, 2: 5}; one disagreeing unit gives D_o = 2/8 and
  // D_e = 2*3*5/(8*7), so alpha = 1 - (1/4)/(15/28) = 8/15.
  ReliabilityData hand;
  hand.items = {{"u1", {{"a", "1"}, {"b", "1"}}},
                {"u2", {{"a", "1"}, {"b", "2"}}},
                {"u3", {{"a", "2"}, {"b", "2"}}},
                {"u4", {{"a", "2"}, {"b", "2"}}}};
  AlphaResult r = KrippendorffAlpha(hand, Distance::kNominal);
  CHECK(r.alpha == doctest::Approx(8.0 / 15.0).epsilon(1e-12));
  CHECK(r.pairable_values == 8);
  CHECK(r.units == 4);
}

TEST_CASE("alpha: ordinal uses cumulative marginals") {
  // Marginals {1: 2, 2: 2, 3: 2}; one unit pairs 1 with 3 and the others
  // agree. delta(1,3) = (2 + 2 + 2 - (2+2)/2)^2 = 16.
  ReliabilityData data;
  data.items = {{"u1", {{"a", "1"}, {"b", "3"}}},
                {"u2", {{"a", "1"}, {"b", "2"}}},
                {"u3", {{"a", "2"}, {"b", "3"}}}};
  AlphaResult r = KrippendorffAlpha(data, Distance::kOrdinal);
  CHECK(r.alpha == doctest::Approx(oracle::Alpha({{1, 3}, {1, 2}, {2, 3}}, true))
                       .epsilon(1e-12));
  // Numeric order is used, not string order, when values are numbers.
  ReliabilityData tens;
  tens.items = {{"u1", {{"a", "9"}, {"b", "10"}}},
                {"u2", {{"a", "10"}, {"b", "11"}}},
                {"u3", {{"a", "9"}, {"b", "9"}}}};
  CHECK(KrippendorffAlpha(tens, Distance::kOrdinal).alpha ==
        doctest::Approx(oracle::Alpha({{9, 10}, {10, 11}, {9, 9}}, true))
            .epsilon(1e-12));
  CHECK(CodeOf([&] {
          KrippendorffAlpha(data, Distance::kOrdinal, {"1", "2"});
        }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("property: kappa and alpha agree with brute-force oracles") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    auto pairs = oracle::RandomPairs(rng);
    REQUIRE(CohenKappa(oracle::ToReliability(pairs)).kappa ==
            doctest::Approx(oracle::Kappa(pairs)).epsilon(1e-12));
  }
  int compared = 0;
  for (int i = 0; i < 300; ++i) {
    auto units = oracle::RandomUnits(rng);
    ReliabilityData data = oracle::ToReliability(units);
    for (Distance d : {Distance::kNominal, Distance::kOrdinal}) {
      std::optional<ErrorCode> code;
      double alpha = 0.0;
      try {
        alpha = KrippendorffAlpha(data, d).alpha;
      } catch (const Error &e) {
        code = e.code();
      }
      if (code) {
        CHECK((*code == ErrorCode::kNoVariation || *code == ErrorCode::kEmptyInput));
        continue;
      }
      ++compared;
      REQUIRE(alpha == doctest::Approx(oracle::Alpha(units, d == Distance::kOrdinal))
                           .epsilon(1e-12));
      CHECK(alpha <= 1.0 + 1e-12);
    }
  }
  CHECK(compared > 400);
}

TEST_CASE("percent agreement") {
  CHECK(PercentAgreement(Pairs({{"a", "a"}, {"b", "b"}})) == Fraction{2, 2});
  CHECK(PercentAgreement(Pairs({{"a", "b"}, {"b", "c"}})) == Fraction{0, 2});
  CHECK(CodeOf([] { PercentAgreement(Pairs({})); }).has_value());
}

TEST_CASE("reliability JSON lines round trip") {
  ReliabilityData data = Pairs({{"CA2", "CA2"}, {"NotApplicable", "GS2"}});
  ReliabilityData back = ParseReliabilityJsonLines(ReliabilityJsonLines(data));
  CHECK(back.items == data.items);
  CHECK(back.Annotators() == std::vector<std::string>{"a", "b"});
  CHECK(CodeOf([] { ParseReliabilityJsonLines("{\"id\":1}\n"); }) ==
        ErrorCode::kSchemaError);
}

TEST_CASE("template selection data from the mini corpus") {
  ReliabilityData overlap = TemplateSelectionData(MiniCorpus(), true);
  CHECK(overlap.items.size() == 5);
  CHECK(overlap.Annotators().size() == 2);
  KappaResult kappa = CohenKappa(overlap);
  CHECK(kappa.kappa == doctest::Approx(0.75).epsilon(1e-12));
}

TEST_CASE("fixture overlap reproduces the published kappa") {
  ReliabilityData overlap = TemplateSelectionData(ReleaseFixture(), true);
  CHECK(overlap.items.size() == 74);
  KappaResult kappa = CohenKappa(overlap);
  CHECK(std::abs(kappa.kappa - 0.517) <= 0.001);
}

TEST_CASE("informativeness data has five workers per diagnosis") {
  ReliabilityData data = InformativenessData(ReleaseFixture());
  CHECK(data.items.size() == 1090);
  for (const ReliabilityItem &item : data.items) CHECK(item.ratings.size() == 5);
}

}  // namespace
}  // namespace typic
