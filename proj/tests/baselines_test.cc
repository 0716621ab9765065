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
#include <set>

#include "doctest.h"
#include "test_util.h"
#include "typic/baselines.h"
#include "typic/benchmark.h"
#include "typic/tokenizer.h"
#include "typic/utf8.h"

namespace typic {
namespace {

using testing::CodeOf;
using testing::GoldenDir;
using testing::MiniCorpus;
using testing::ReleaseFixture;
using testing::ShippedTemplates;
using testing::TinyCorpusData;

LabelVector Vec(std::vector<std::string> ids) {
  std::vector<Label> labels;
  for (auto &id : ids) labels.push_back(Label::Template(id));
  return LabelVector::FromLabels(*ShippedTemplates(), labels);
}

SelectionInstance Instance(std::string text, std::vector<std::string> gold) {
  SelectionInstance instance;
  instance.counterargument_id = "CA";
  instance.target_text = std::move(text);
  instance.gold = Vec(std::move(gold));
  return instance;
}

Counterargument PaperExcerpt() {
  const std::string s1 =
      "That is to say even if abolishing homework, students become passive "
      "in character.";
  const std::string s2 =
      "This is because students are instructed by teachers in club activity "
      "or cram school in many situation.";
  Counterargument ca;
  ca.id = "CA-excerpt";
  ca.topic_id = "HW";
  ca.text = s1 + " " + s2;
  ca.sentences = {{0, s1.size()}, {s1.size() + 1, s1.size() + 1 + s2.size()}};
  return ca;
}

std::string_view DocumentText(const SourceSpan &source,
                              const Counterargument &ca,
                              const std::vector<Point> &original) {
  if (source.document == kCounterargumentDocument) return ca.text;
  for (const Point &point : original) {
    if (source.document == "original:" + point.id) return point.text;
  }
  FAIL("unknown document " << source.document);
  return {};
}

TEST_CASE("selection instances pool annotators per target") {
  const Corpus &corpus = MiniCorpus();
  std::vector<TemplatedDiagnosis> all = corpus.diagnoses();
  all.insert(all.end(), corpus.overlap_diagnoses().begin(),
             corpus.overlap_diagnoses().end());
  std::vector<SelectionInstance> instances = BuildSelectionInstances(corpus, all);
  std::set<std::pair<std::string, std::vector<int>>> keys;
  for (const SelectionInstance &instance : instances) {
    CHECK(instance.gold.dimension() == 24);
    CHECK(keys.emplace(instance.counterargument_id, instance.target).second);
    CHECK_FALSE(instance.target_text.empty());
  }
  for (const TemplatedDiagnosis &d : all) {
    const DiagnosticComment &c = *corpus.FindComment(d.comment_id);
    bool found = false;
    for (const SelectionInstance &instance : instances) {
      if (instance.counterargument_id != c.counterargument_id ||
          instance.target != c.target) {
        continue;
      }
      found = true;
      if (!d.label.is_not_applicable()) {
        CHECK(instance.gold.test(*ShippedTemplates()->IndexOf(d.label.name())));
      }
    }
    CHECK(found);
  }
}

TEST_CASE("partition follows the first comment of each instance") {
  const Corpus &corpus = MiniCorpus();
  auto instances = BuildSelectionInstances(corpus, corpus.diagnoses());
  InstancePartition parts = PartitionInstances(instances, *corpus.split());
  CHECK(parts.dev.size() + parts.eval.size() == instances.size());
  const auto &dev = corpus.split()->dev;
  for (const auto &instance : parts.dev) {
    CHECK(std::find(dev.begin(), dev.end(), instance.comment_ids.front()) !=
          dev.end());
  }
}

TEST_CASE("filling instances carry gold fillers with the template slots") {
  const Corpus &corpus = MiniCorpus();
  auto fillings = BuildFillingInstances(corpus, corpus.diagnoses());
  CHECK(fillings.size() == 19);
  for (const FillingInstance &f : fillings) {
    std::set<SlotName> keys;
    for (const auto &[slot, filler] : f.gold) keys.insert(slot);
    const auto &slots = ShippedTemplates()->Get(f.template_id).slots;
    CHECK(keys == std::set<SlotName>(slots.begin(), slots.end()));
  }
}

TEST_CASE("majority selector") {
  std::vector<SelectionInstance> dev = {
      Instance("a", {"CLS1"}), Instance("b", {"CLS1", "CA2"}),
      Instance("c", {"CLS1"}), Instance("d", {"CA2", "EX1"})};
  MajoritySelector one(dev);
  CHECK(one.constant() == Vec({"CLS1"}));
  CHECK(one.Predict(Instance("zzz", {})) == Vec({"CLS1"}));
  CHECK(MajoritySelector(dev, 2).constant() == Vec({"CLS1", "CA2"}));
  CHECK(MajoritySelector(dev, 3).constant() == Vec({"CLS1", "CA2", "EX1"}));
  CHECK(MajoritySelector(dev, 24).constant() == Vec({"CLS1", "CA2", "EX1"}));
  CHECK(CodeOf([] { MajoritySelector({}); }) == ErrorCode::kEmptyDev);
  CHECK(CodeOf([&] { MajoritySelector(dev, 0); }) ==
        ErrorCode::kInvalidArgument);
}

TEST_CASE("jaccard") {
  CHECK(Jaccard({"a", "b"}, {"b", "c"}) == doctest::Approx(1.0 / 3.0));
  CHECK(Jaccard({}, {}) == 0.0);
  CHECK(Jaccard({"a"}, {"a"}) == 1.0);
}

TEST_CASE("k-NN selector: self retrieval and tie break") {
  std::vector<SelectionInstance> dev = {
      Instance("Homework builds habits.", {"CA1"}),
      Instance("Students play games at home.", {"CA2", "GS2"}),
      Instance("Teachers check homework habits daily.", {"EX1"})};
  LexicalKnnSelector knn(dev, 1);
  for (const SelectionInstance &instance : dev) {
    CHECK(knn.Predict(instance) == instance.gold);
  }
  CHECK(knn.Predict(Instance("Death penalty is inhumane", {})) == Vec({"CA1"}));
  CHECK(CodeOf([] { LexicalKnnSelector({}, 1); }) == ErrorCode::kEmptyDev);
}

TEST_CASE("k-NN selector: hand-computed ranking") {
  // Query tokens {homework, habits, matter}:
  //   dev 0 {homework, builds, habits}           J = 2/4
  //   dev 1 {students, play, games, at, home}    J = 0
  //   dev 2 {teachers, check, homework, habits, daily}  J = 2/6
  std::vector<SelectionInstance> dev = {
      Instance("Homework builds habits.", {"CA1"}),
      Instance("Students play games at home.", {"CA2"}),
      Instance("Teachers check homework habits daily.", {"EX1"})};
  SelectionInstance query = Instance("Homework habits matter", {});
  LexicalKnnSelector knn(dev, 1);
  CHECK(knn.TokenSet("Homework habits matter") ==
        std::set<std::string>{"habits", "homework", "matter"});
  CHECK(knn.Predict(query) == Vec({"CA1"}));
  CHECK(LexicalKnnSelector(dev, 2).Predict(query) == Vec({"CA1", "EX1"}));
  CHECK(LexicalKnnSelector(dev, 3).Predict(query) == Vec({"CA1", "CA2", "EX1"}));
}

TEST_CASE("candidates come from the target, the rest, then the original") {
  Counterargument ca = PaperExcerpt();
  const Topic &hw = *MiniCorpus().FindTopic("HW");
  BoundaryChunker chunker;
  std::vector<FillCandidate> candidates =
      FillCandidates(ca, hw.points, std::vector<int>{1}, chunker);
  REQUIRE_FALSE(candidates.empty());
  CHECK(candidates.front().in_target);
  CHECK(candidates.front().chunk.text == "students");
  CHECK(candidates.back().document == "original:HW2");
  bool seen_rest = false;
  for (const FillCandidate &c : candidates) {
    if (!c.in_target && c.document == kCounterargumentDocument) seen_rest = true;
    if (c.in_target) CHECK_FALSE(seen_rest);
  }
  CHECK(CodeOf([&] { FillCandidates(ca, {}, std::vector<int>{5}, chunker); }) ==
        ErrorCode::kSpanError);
}

TEST_CASE("extractive filler on the homework excerpt") {
  Counterargument ca = PaperExcerpt();
  const Topic &hw = *MiniCorpus().FindTopic("HW");
  ExtractiveFiller filler(*ShippedTemplates());
  auto fillers = filler.Fill(ShippedTemplates()->Get("CA2"), ca, hw.points,
                             std::vector<int>{0});
  REQUIRE(fillers.size() == 2);
  const Filler &x = fillers.at("x");
  CHECK(x.text.find("abolishing homework") != std::string::npos);
  CHECK(x.extractability == Extractability::kExtractable);
  REQUIRE(x.source.has_value());
  CHECK(x.source->document == "counterargument");
  CHECK(x.source->span == CharSpan{23, 42});
  CHECK(fillers.at("y").text == "students become passive");
  CHECK(filler.ContextWords(ShippedTemplates()->Get("CA2"), "y").count("bad"));
}

TEST_CASE("extractive filler: degenerate documents") {
  ExtractiveFiller filler(*ShippedTemplates());
  const Template &ca2 = ShippedTemplates()->Get("CA2");
  Counterargument empty;
  empty.id = "CA-empty";
  CHECK(CodeOf([&] { filler.Fill(ca2, empty, {}, {}); }) ==
        ErrorCode::kNoCandidates);

  Counterargument single;
  single.id = "CA-single";
  single.text = "Homework matters.";
  single.sentences = {{0, 17}};
  auto fillers = filler.Fill(ca2, single, {}, std::vector<int>{0});
  CHECK(fillers.at("x").text == "Homework matters");
  CHECK(fillers.at("y").text == "Homework matters");

  auto gs2 = filler.Fill(ShippedTemplates()->Get("GS2"), single, {},
                         std::vector<int>{0});
  REQUIRE(gs2.size() == 1);
  CHECK(gs2.begin()->second.text.empty());
  CHECK(gs2.begin()->second.extractability == Extractability::kNotExtractable);
}

TEST_CASE("property: predicted spans lie inside their source documents") {
  ExtractiveFiller filler(*ShippedTemplates());
  for (const Corpus *corpus : {&MiniCorpus(), &ReleaseFixture()}) {
    auto fillings = BuildFillingInstances(*corpus, corpus->diagnoses());
    for (size_t i = 0; i < fillings.size(); i += 3) {
      const FillingInstance &f = fillings[i];
      for (const auto &[slot, predicted] : filler.Fill(f)) {
        if (!predicted.source) continue;
        std::string_view doc =
            DocumentText(*predicted.source, f.counterargument, f.original);
        const CharSpan &span = predicted.source->span;
        REQUIRE(span.begin < span.end);
        REQUIRE(span.end <= CodePointCount(doc));
        REQUIRE(SliceCodePoints(doc, span.begin, span.end) == predicted.text);
      }
    }
  }
}

TEST_CASE("empty filler leaves every slot empty") {
  const Corpus &corpus = MiniCorpus();
  auto fillings = BuildFillingInstances(corpus, corpus.diagnoses());
  EmptyFiller empty(*ShippedTemplates());
  auto out = empty.Fill(fillings.front());
  CHECK(out.size() == fillings.front().gold.size());
  for (const auto &[slot, filler] : out) CHECK(filler.text.empty());
}

TEST_CASE("benchmark: oracle sandwich on the mini corpus") {
  BenchmarkReport report = RunBenchmark(MiniCorpus(), {});
  CHECK(report.split_source == "manifest");
  REQUIRE(report.models.size() == 4);
  const ModelReport &gold = report.models[0];
  const ModelReport &empty = report.models[1];
  const ModelReport &majority = report.models[2];
  CHECK(gold.name == "gold");
  CHECK(gold.selection.micro.f1 == 1.0);
  CHECK(gold.selection.subset_accuracy == 1.0);
  CHECK(gold.filling.f1 == 1.0);
  CHECK(gold.filling.exact_match_rate == 1.0);
  CHECK(empty.selection.micro.f1 == 0.0);
  CHECK(empty.filling.f1 == 0.0);
  CHECK(empty.selection.micro.f1 <= majority.selection.micro.f1);
  CHECK(majority.selection.micro.f1 <= gold.selection.micro.f1);
}

TEST_CASE("benchmark: seeded split when the manifest has none") {
  CorpusData data = MiniCorpus().data();
  data.split.reset();
  Corpus corpus(data, ShippedTemplates());
  BenchmarkOptions options;
  options.seed = 5;
  BenchmarkReport a = RunBenchmark(corpus, options);
  BenchmarkReport b = RunBenchmark(corpus, options);
  CHECK(a.split_source == "seeded");
  CHECK(ToJson(a, *ShippedTemplates()).dump() ==
        ToJson(b, *ShippedTemplates()).dump());
  CHECK(a.models[0].selection.micro.f1 == 1.0);
}

TEST_CASE("benchmark: option errors") {
  BenchmarkOptions bad_model;
  bad_model.models = {"oracle"};
  CHECK(CodeOf([&] { RunBenchmark(MiniCorpus(), bad_model); }) ==
        ErrorCode::kInvalidArgument);
  auto tok = MakeTokenizer("unicode-word");
  CHECK(CodeOf([&] { Evaluate({}, {}, {}, *tok); }) == ErrorCode::kEmptyInput);
  CHECK(AvailableModels() ==
        std::vector<std::string>{"gold", "empty", "majority", "knn"});
}

TEST_CASE("benchmark: reports match the pinned goldens byte for byte") {
  struct Case {
    const Corpus *corpus;
    const char *file;
  };
  for (const Case &c : {Case{&MiniCorpus(), "benchmark_mini.json"},
                        Case{&ReleaseFixture(), "benchmark_release.json"}}) {
    BenchmarkReport report = RunBenchmark(*c.corpus, {});
    std::string actual = ToJson(report, *ShippedTemplates()).dump(2) + "\n";
    CHECK_MESSAGE(actual == ReadFile(GoldenDir() / c.file), c.file);
  }
}

}  // namespace
}  // namespace typic
