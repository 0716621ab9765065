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

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.h"
#include "test_util.h"
#include "typic/multilabel.h"
#include "typic/tokenizer.h"

namespace typic {
namespace {

using testing::CodeOf;
using testing::ShippedTemplates;

LabelVector Vec(std::vector<std::string> ids) {
  std::vector<Label> labels;
  for (auto &id : ids) labels.push_back(Label::Template(id));
  return LabelVector::FromLabels(*ShippedTemplates(), labels);
}

LabelVector FromSet(const std::set<int> &bits, size_t n) {
  LabelVector v(n);
  for (int b : bits) v.set(static_cast<size_t>(b));
  return v;
}

TEST_CASE("label vectors follow template-set order") {
  LabelVector v = Vec({"GS2", "CA2", "NotApplicable"});
  CHECK(v.dimension() == 24);
  CHECK(v.count() == 2);
  CHECK(v.test(1));
  CHECK(v.test(23));
  CHECK(v.Ids(*ShippedTemplates()) == std::vector<std::string>{"CA2", "GS2"});
}

TEST_CASE("multilabel eval examples") {
  std::vector<LabelVector> gold = {Vec({"CA2"})};
  std::vector<LabelVector> pred = {Vec({"CA2", "GS2"})};
  MultilabelReport r = MultilabelEval(gold, pred);
  CHECK(r.micro.precision == 0.5);
  CHECK(r.micro.recall == 1.0);
  CHECK(r.micro.f1 == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(r.subset_accuracy == 0.0);
  CHECK(r.example_accuracy == 0.5);

  MultilabelReport same = MultilabelEval(gold, gold);
  CHECK(same.micro.f1 == 1.0);
  CHECK(same.macro_f1 == 1.0);
  CHECK(same.subset_accuracy == 1.0);
  CHECK(same.example_accuracy == 1.0);

  std::vector<LabelVector> empty = {LabelVector(24)};
  MultilabelReport zero = MultilabelEval(gold, empty);
  CHECK(zero.micro.recall == 0.0);
  CHECK(zero.micro.f1 == 0.0);
  // Macro: CA2 scores 0 and the other 23 labels are vacuous.
  CHECK(zero.macro_f1 == doctest::Approx(23.0 / 24.0));
}

TEST_CASE("multilabel eval errors") {
  std::vector<LabelVector> one = {LabelVector(24)};
  std::vector<LabelVector> two = {LabelVector(24), LabelVector(24)};
  std::vector<LabelVector> narrow = {LabelVector(3)};
  CHECK(CodeOf([&] { MultilabelEval(one, two); }) ==
        ErrorCode::kDimensionMismatch);
  CHECK(CodeOf([&] { MultilabelEval(one, narrow); }) ==
        ErrorCode::kDimensionMismatch);
  CHECK(CodeOf([] { MultilabelEval({}, {}); }) == ErrorCode::kEmptyInput);
}

TEST_CASE("property: micro counts match hand counting") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> bit(0, 1);
  const size_t n = 6;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::set<int>> gold_sets(1 + trial % 5), pred_sets(1 + trial % 5);
    for (size_t i = 0; i < gold_sets.size(); ++i) {
      for (int b = 0; b < static_cast<int>(n); ++b) {
        if (bit(rng) && bit(rng)) gold_sets[i].insert(b);
        if (bit(rng) && bit(rng)) pred_sets[i].insert(b);
      }
    }
    std::vector<LabelVector> gold, pred;
    for (size_t i = 0; i < gold_sets.size(); ++i) {
      gold.push_back(FromSet(gold_sets[i], n));
      pred.push_back(FromSet(pred_sets[i], n));
    }
    oracle::Counts counts = oracle::MicroCounts(gold_sets, pred_sets);
    MultilabelReport r = MultilabelEval(gold, pred);
    REQUIRE(r.micro.tp == counts.tp);
    REQUIRE(r.micro.fp == counts.fp);
    REQUIRE(r.micro.fn == counts.fn);
    REQUIRE(r.micro.f1 == doctest::Approx(oracle::MicroF1(counts)).epsilon(1e-15));

    // Relabel consistently; micro-F1 does not change.
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<LabelVector> gold_p, pred_p;
    for (size_t i = 0; i < gold_sets.size(); ++i) {
      std::set<int> g, p;
      for (int b : gold_sets[i]) g.insert(perm[b]);
      for (int b : pred_sets[i]) p.insert(perm[b]);
      gold_p.push_back(FromSet(g, n));
      pred_p.push_back(FromSet(p, n));
    }
    REQUIRE(MultilabelEval(gold_p, pred_p).micro.f1 == r.micro.f1);
  }
}

TEST_CASE("score counts convention") {
  PrecisionRecall vacuous = ScoreCounts(0, 0, 0);
  CHECK(vacuous.precision == 1.0);
  CHECK(vacuous.recall == 1.0);
  CHECK(vacuous.f1 == 1.0);
  PrecisionRecall missed = ScoreCounts(0, 0, 2);
  CHECK(missed.recall == 0.0);
  CHECK(missed.f1 == 0.0);
}

TEST_CASE("slot overlap examples") {
  SlotOverlapScore s = SlotOverlap("abolishing homework", "homework", "unicode-word");
  CHECK(s.precision == 0.5);
  CHECK(s.recall == 1.0);
  CHECK(s.f1 == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK_FALSE(s.exact_match);

  SlotOverlapScore same = SlotOverlap("Abolishing homework.", "abolishing homework",
                                      "unicode-word");
  CHECK(same.f1 == 1.0);
  CHECK(SlotOverlap("homework", "homework", "unicode-word").exact_match);

  CHECK(SlotOverlap("free time", "study habits", "unicode-word").f1 == 0.0);
  CHECK(CodeOf([] { SlotOverlap("a", "b", "bpe"); }) ==
        ErrorCode::kUnknownTokenizer);
  CHECK(CodeOf([] { SlotOverlap("", "b", "unicode-word"); }) ==
        ErrorCode::kEmptyInput);
}

TEST_CASE("slot overlap bigrams") {
  SlotOverlapScore s =
      SlotOverlap("students become passive", "students become lazy",
                  "unicode-word", 2);
  CHECK(s.precision == 0.5);
  CHECK(s.recall == 0.5);
}

TEST_CASE("property: swapping pred and gold swaps precision and recall") {
  const std::vector<std::string> texts = {
      "abolishing homework", "homework", "students become passive in character",
      "passive students", "club activity or cram school", "cram school cram",
      "宿題を廃止する", "宿題"};
  auto tok = MakeTokenizer("unicode-word");
  for (const auto &a : texts) {
    for (const auto &b : texts) {
      for (int n : {1, 2}) {
        SlotOverlapScore ab = SlotOverlap(a, b, *tok, n);
        SlotOverlapScore ba = SlotOverlap(b, a, *tok, n);
        CHECK(ab.precision == ba.recall);
        CHECK(ab.recall == ba.precision);
        CHECK(ab.f1 == doctest::Approx(ba.f1).epsilon(1e-15));
      }
    }
  }
}

}  // namespace
}  // namespace typic
