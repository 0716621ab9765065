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
#include <fstream>
#include <set>

#include "doctest.h"
#include "test_util.h"
#include "typic/corpus.h"
#include "typic/utf8.h"

namespace typic {
namespace {

using testing::CodeOf;
using testing::DataDir;
using testing::MiniCorpus;
using testing::ReleaseFixture;
using testing::ShippedTemplates;
using testing::TempDir;
using testing::TinyCorpusData;

Corpus Tiny(CorpusData data) {
  return Corpus(std::move(data), ShippedTemplates());
}

bool HasIssue(const CorpusData &data, ErrorCode code) {
  for (const Issue &issue : ValidateCorpusData(data, *ShippedTemplates())) {
    if (issue.code == code) return true;
  }
  return false;
}

TEST_CASE("mini corpus loads with cross references resolved") {
  const Corpus &corpus = MiniCorpus();
  CHECK(corpus.manifest().name == "typic-mini");
  CHECK(corpus.topics().size() == 2);
  CHECK(corpus.counterarguments().size() == 4);
  CHECK(corpus.comments().size() == 20);
  CHECK(corpus.diagnoses().size() == 21);
  CHECK(corpus.overlap_diagnoses().size() == 5);
  CHECK(corpus.judgments().size() == 57);
  REQUIRE(corpus.split().has_value());
  const DiagnosticComment *m01 = corpus.FindComment("M01");
  REQUIRE(m01 != nullptr);
  CHECK(corpus.TopicOfComment(*m01).id == "HW");
  CHECK(corpus.FindDiagnosis("TO01") != nullptr);
  CHECK(corpus.FindDiagnosis("nope") == nullptr);
  const Counterargument *ca = corpus.FindCounterargument("CA-HW-1");
  REQUIRE(ca != nullptr);
  CHECK(corpus.SentenceText(*ca, 0) == "Homework should not be abolished.");
}

TEST_CASE("release fixture has the published corpus size") {
  const Corpus &corpus = ReleaseFixture();
  CHECK(corpus.counterarguments().size() == 1000);
  CHECK(corpus.comments().size() == 1082);
}

TEST_CASE("sentence spans tile the text in order on every shipped corpus") {
  for (const Corpus *corpus : {&MiniCorpus(), &ReleaseFixture()}) {
    for (const Counterargument &ca : corpus->counterarguments()) {
      size_t previous = 0;
      for (const CharSpan &span : ca.sentences) {
        CHECK(span.begin >= previous);
        CHECK(span.end > span.begin);
        previous = span.end;
      }
      CHECK(previous <= CodePointCount(ca.text));
    }
  }
}

TEST_CASE("validation: dangling references and span errors") {
  CorpusData data = TinyCorpusData(2);
  CHECK(ValidateCorpusData(data, *ShippedTemplates()).empty());

  CorpusData dangling = data;
  dangling.comments[0].counterargument_id = "CA-unknown";
  CHECK(HasIssue(dangling, ErrorCode::kDanglingReference));
  CHECK(CodeOf([&] { Tiny(dangling); }) == ErrorCode::kDanglingReference);

  CorpusData beyond = data;
  beyond.counterarguments[0].sentences.back().end = 500;
  CHECK(CodeOf([&] { Tiny(beyond); }) == ErrorCode::kSpanError);

  CorpusData overlapping = data;
  overlapping.counterarguments[0].sentences[1].begin = 10;
  CHECK(HasIssue(overlapping, ErrorCode::kSpanError));

  CorpusData bad_target = data;
  bad_target.comments[0].target = {7};
  CHECK(HasIssue(bad_target, ErrorCode::kSpanError));

  CorpusData empty_text = data;
  empty_text.comments[0].text.clear();
  CHECK(HasIssue(empty_text, ErrorCode::kInvariantViolation));
}

TEST_CASE("validation: diagnoses, fillers and judgments") {
  CorpusData data = TinyCorpusData(1);
  TemplatedDiagnosis d;
  d.id = "D1";
  d.comment_id = "C0";
  d.annotator_id = "A1";
  d.label = Label::Template("CA2");
  d.fillers["x"] = {"Homework", SourceSpan{"counterargument", {0, 8}},
                    Extractability::kExtractable};
  d.fillers["y"] = {"habits", std::nullopt, std::nullopt};
  data.diagnoses.push_back(d);
  CHECK(ValidateCorpusData(data, *ShippedTemplates()).empty());

  CorpusData one_filler = data;
  one_filler.diagnoses[0].fillers.erase("y");
  CHECK(HasIssue(one_filler, ErrorCode::kInvariantViolation));

  CorpusData unknown = data;
  unknown.diagnoses[0].label = Label::Parse("CA9");
  CHECK(HasIssue(unknown, ErrorCode::kDanglingReference));

  CorpusData no_source = data;
  no_source.diagnoses[0].fillers["x"].source.reset();
  CHECK(HasIssue(no_source, ErrorCode::kInvariantViolation));

  CorpusData outside = data;
  outside.diagnoses[0].fillers["x"].source->span = {50, 90};
  CHECK(HasIssue(outside, ErrorCode::kSpanError));

  CorpusData original = data;
  original.diagnoses[0].fillers["x"].source =
      SourceSpan{"original:P1", {0, 8}};
  CHECK(ValidateCorpusData(original, *ShippedTemplates()).empty());
  original.diagnoses[0].fillers["x"].source->document = "original:P9";
  CHECK(HasIssue(original, ErrorCode::kDanglingReference));

  CorpusData na = data;
  na.diagnoses[0].label = Label::NotApplicable();
  CHECK(HasIssue(na, ErrorCode::kInvariantViolation));
  na.diagnoses[0].fillers.clear();
  CHECK(ValidateCorpusData(na, *ShippedTemplates()).empty());

  CorpusData judged = data;
  judged.judgments.push_back({"D1", "C0", "W1", 3});
  CHECK(ValidateCorpusData(judged, *ShippedTemplates()).empty());
  judged.judgments.push_back({"D1", "C0", "W2", 4});
  CHECK(HasIssue(judged, ErrorCode::kInvariantViolation));
  judged.judgments.back() = {"D7", "C0", "W2", 2};
  CHECK(HasIssue(judged, ErrorCode::kDanglingReference));
}

TEST_CASE("validation: split must partition the comments") {
  CorpusData data = TinyCorpusData(3);
  data.split = Split{{"C0"}, {"C1", "C2"}};
  CHECK(ValidateCorpusData(data, *ShippedTemplates()).empty());
  data.split = Split{{"C0"}, {"C1"}};
  CHECK(HasIssue(data, ErrorCode::kInvariantViolation));
  data.split = Split{{"C0", "C1"}, {"C1", "C2"}};
  CHECK(HasIssue(data, ErrorCode::kInvariantViolation));
  data.split = Split{{"C0"}, {"C1", "C2", "C9"}};
  CHECK(HasIssue(data, ErrorCode::kDanglingReference));
}

TEST_CASE("corrupted directory reports every issue") {
  std::vector<Issue> issues = ValidateCorpusDir(DataDir() / "invalid_corpus");
  REQUIRE(issues.size() == 3);
  CHECK(issues[0].code == ErrorCode::kDanglingReference);
  CHECK(issues[1].code == ErrorCode::kDanglingReference);
  CHECK(issues[2].code == ErrorCode::kInvariantViolation);
  CHECK(CodeOf([] { LoadCorpus(DataDir() / "invalid_corpus"); }) ==
        ErrorCode::kDanglingReference);
}

TEST_CASE("malformed files raise SchemaError") {
  TempDir dir;
  WriteCorpus(TinyCorpusData(1), dir.path());
  {
    std::ofstream out(dir.path() / "comments.jsonl", std::ios::app);
    out << "{\"id\": 5}\n";
  }
  CHECK(CodeOf([&] { LoadCorpus(dir.path(), ShippedTemplates()); }) ==
        ErrorCode::kSchemaError);
  CHECK(CodeOf([] { LoadCorpus("/nonexistent/typic"); }).has_value());
}

TEST_CASE("split_comments: sizes, determinism, partition, strata") {
  const Corpus &corpus = ReleaseFixture();
  Split a = SplitComments(corpus, 0.25, 7);
  Split b = SplitComments(corpus, 0.25, 7);
  CHECK(a.dev.size() == 271);
  CHECK(a.eval.size() == 811);
  CHECK(a == b);
  std::set<std::string> all(a.dev.begin(), a.dev.end());
  all.insert(a.eval.begin(), a.eval.end());
  CHECK(all.size() == 1082);
  std::set<std::string> topics;
  for (const std::string &id : a.dev) {
    topics.insert(corpus.TopicOfComment(*corpus.FindComment(id)).id);
  }
  CHECK(topics.size() == corpus.topics().size());
  CHECK(SplitComments(corpus, 0.25, 8) != a);
}

TEST_CASE("split_comments: small and degenerate inputs") {
  Corpus four = Tiny(TinyCorpusData(4));
  Split split = SplitComments(four, 0.25, 1);
  CHECK(split.dev.size() == 1);
  CHECK(split.eval.size() == 3);
  Corpus none = Tiny(TinyCorpusData(0));
  CHECK(CodeOf([&] { SplitComments(none, 0.25, 1); }) ==
        ErrorCode::kEmptyCorpus);
  CHECK(CodeOf([&] { SplitComments(four, 1.0, 1); }) ==
        ErrorCode::kInvalidArgument);
}

TEST_CASE("property: every split partitions the comment ids") {
  const Corpus &corpus = MiniCorpus();
  for (uint64_t seed = 0; seed < 50; ++seed) {
    for (double ratio : {0.1, 0.25, 0.5, 0.9}) {
      Split split = SplitComments(corpus, ratio, seed);
      std::vector<std::string> ids = split.dev;
      ids.insert(ids.end(), split.eval.begin(), split.eval.end());
      std::sort(ids.begin(), ids.end());
      CHECK(std::adjacent_find(ids.begin(), ids.end()) == ids.end());
      CHECK(ids.size() == corpus.comments().size());
    }
  }
}

TEST_CASE("corpus_stats on a tiny corpus and on the fixture") {
  StatsReport tiny = CorpusStats(Tiny(TinyCorpusData(0)), "unicode-word");
  CHECK(tiny.counterarguments == 1);
  CHECK(tiny.AvgSentences().value() == 3.0);
  CHECK(tiny.comments == 0);
  CHECK(tiny.tokens == 8);

  StatsReport stats = CorpusStats(ReleaseFixture(), "unicode-word");
  CHECK(stats.tokenizer == "unicode-word");
  CHECK(stats.counterarguments == 1000);
  CHECK(stats.comments == 1082);
  CHECK(stats.annotated_counterarguments == 197);
  CHECK(stats.AvgCommentsPerAnnotated() == Fraction{1082, 197});
  CHECK(stats.AvgSentences().value() == doctest::Approx(7.1).epsilon(0.005));
  CHECK(CodeOf([] { CorpusStats(MiniCorpus(), "bpe"); }) ==
        ErrorCode::kUnknownTokenizer);
}

TEST_CASE("property: load, write, load is identical and byte stable") {
  for (const char *name : {"mini_corpus", "release_fixture"}) {
    const std::filesystem::path source = DataDir() / name;
    Corpus first = LoadCorpus(source);
    TempDir dir;
    CorpusData data = first.data();
    data.manifest.template_set =
        (DataDir() / "templates" / "typic_templates.json").string();
    WriteCorpus(data, dir.path());
    Corpus second = LoadCorpus(dir.path());
    CHECK(second.data() == data);
    for (const auto &[key, file] : first.manifest().files) {
      if (key == "slot_adjudication") continue;
      CHECK_MESSAGE(ReadFile(dir.path() / file) == ReadFile(source / file),
                    name << "/" << file);
    }
  }
}

}  // namespace
}  // namespace typic
