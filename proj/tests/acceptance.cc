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

// Acceptance suite: one PASS/FAIL line per criterion. Exits 1 when any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.h"
#include "scripted_session.h"
#include "test_util.h"
#include "typic/agreement.h"
#include "typic/benchmark.h"
#include "typic/metrics.h"
#include "typic/multilabel.h"
#include "typic/reliability.h"
#include "typic/service.h"

namespace typic {
namespace {

using testing::DataDir;
using testing::ShippedTemplates;

// Collects the failed checks of one criterion.
class Check {
 public:
  void That(bool ok, const std::string &what) {
    if (!ok) failures_.push_back(what);
  }
  void Near(double actual, double expected, double tol, const std::string &what) {
    std::ostringstream s;
    s.precision(6);
    s << what << " = " << actual << ", want " << expected << " +/- " << tol;
    That(std::abs(actual - expected) <= tol, s.str());
  }
  void Equal(const Fraction &actual, const Fraction &expected,
             const std::string &what) {
    That(actual == expected,
         what + " = " + actual.Ratio() + ", want " + expected.Ratio());
  }
  const std::vector<std::string> &failures() const { return failures_; }

 private:
  std::vector<std::string> failures_;
};

struct Criterion {
  const char *name;
  double time_limit_s;  // 0 for none
  std::function<void(Check &)> body;
};

std::filesystem::path Release() { return DataDir() / "release_fixture"; }

void CorpusStatsCriterion(Check &c) {
  Corpus corpus = LoadCorpus(Release());
  StatsReport s = CorpusStats(corpus, corpus.manifest().tokenizer);
  c.That(s.counterarguments == 1000, "counterarguments != 1000");
  c.That(s.comments == 1082, "comments != 1082");
  c.Near(s.AvgSentences().value(), 7.1, 0.05, "avg sentences");
  c.Near(s.AvgCommentsPerAnnotated().value(), 5.5, 0.05,
         "avg comments per annotated counterargument");
  c.Near(s.AvgTokens().value(), 124.0, 2.0, "avg tokens");
}

void ExpressivenessCriterion(Check &c) {
  Corpus corpus = LoadCorpus(Release());
  c.That(corpus.split().has_value(), "fixture has no split");
  if (!corpus.split()) return;
  c.Equal(Coverage(FilterByComments(corpus.diagnoses(), corpus.split()->eval)),
          {757, 821}, "coverage");
}

void UniquenessCriterion(Check &c) {
  Corpus corpus = LoadCorpus(Release());
  KappaResult k = CohenKappa(TemplateSelectionData(corpus, true));
  c.That(k.items == 74, "double-annotated items = " + std::to_string(k.items));
  c.Near(k.kappa, 0.517, 0.001, "kappa");
  auto it = corpus.manifest().files.find("slot_adjudication");
  c.That(it != corpus.manifest().files.end(), "no slot adjudication file");
  if (it == corpus.manifest().files.end()) return;
  c.Equal(PercentAgreement(LoadReliabilityFile(Release() / it->second)),
          {65, 73}, "slot agreement");
}

void InformativenessCriterion(Check &c) {
  Corpus corpus = LoadCorpus(Release());
  auto shares = InformativenessDistribution(AggregateJudgments(corpus.judgments()));
  c.Equal(shares[3], {857, 1090}, "score-3 share");
  AlphaResult alpha = KrippendorffAlpha(InformativenessData(corpus),
                                        Distance::kOrdinal, {"1", "2", "3"});
  c.Near(alpha.alpha, 0.265, 0.005, "ordinal alpha");
}

void AnalysesCriterion(Check &c) {
  Corpus corpus = LoadCorpus(Release());
  auto extract = ExtractabilityDistribution(CollectFillers(corpus.diagnoses()));
  c.Equal(extract[Extractability::kExtractable], {126, 166}, "extractable");
  c.Equal(extract[Extractability::kExtractableWithChanges], {14, 166},
          "extractable with changes");
  c.Equal(extract[Extractability::kNotExtractable], {26, 166}, "not extractable");
  auto per_target = DiagnosesPerTarget(GroupByTarget(corpus, corpus.diagnoses()));
  const std::map<int, int64_t> want = {{1, 542}, {2, 144}, {3, 52}, {4, 19}, {5, 5}};
  c.That(per_target.size() == want.size(), "per-target buckets differ");
  for (const auto &[templates, count] : want) {
    c.Equal(per_target[templates], {count, 762},
            std::to_string(templates) + " templates per target");
  }
}

void MetricOraclesCriterion(Check &c) {
  std::mt19937_64 rng(2024);
  int worst_kappa = 0, worst_alpha = 0;
  for (int i = 0; i < 1000; ++i) {
    auto pairs = oracle::RandomPairs(rng);
    double expected = oracle::Kappa(pairs);
    try {
      double actual = CohenKappa(oracle::ToReliability(pairs)).kappa;
      if (!(std::abs(actual - expected) <= 1e-12)) ++worst_kappa;
    } catch (const Error &e) {
      if (e.code() != ErrorCode::kDegenerateChance || !std::isnan(expected)) {
        ++worst_kappa;
      }
    }
    auto units = oracle::RandomUnits(rng);
    for (bool ordinal : {false, true}) {
      double want = oracle::Alpha(units, ordinal);
      try {
        double got = KrippendorffAlpha(oracle::ToReliability(units),
                                       ordinal ? Distance::kOrdinal
                                               : Distance::kNominal)
                         .alpha;
        if (!(std::abs(got - want) <= 1e-12)) ++worst_alpha;
      } catch (const Error &e) {
        bool undefined = std::isnan(want);
        bool expected_error = e.code() == ErrorCode::kEmptyInput ||
                              e.code() == ErrorCode::kNoVariation;
        if (!undefined || !expected_error) ++worst_alpha;
      }
    }
  }
  c.That(worst_kappa == 0, std::to_string(worst_kappa) + " kappa mismatches");
  c.That(worst_alpha == 0, std::to_string(worst_alpha) + " alpha mismatches");

  int multisets = 0, vote_mismatches = 0;
  for (int a = 1; a <= 3; ++a)
    for (int b = a; b <= 3; ++b)
      for (int d = b; d <= 3; ++d)
        for (int e = d; e <= 3; ++e)
          for (int f = e; f <= 3; ++f) {
            std::vector<int> votes = {a, b, d, e, f};
            ++multisets;
            if (MajorityVote(votes).score != oracle::MajorityScore(votes)) {
              ++vote_mismatches;
            }
          }
  c.That(multisets == 21, "enumerated " + std::to_string(multisets) + " multisets");
  c.That(vote_mismatches == 0,
         std::to_string(vote_mismatches) + " majority-vote mismatches");

  std::bernoulli_distribution coin(0.3);
  int f1_mismatches = 0;
  const int labels = 5;
  for (int i = 0; i < 50; ++i) {
    std::vector<std::set<int>> gold(1 + i % 4), pred(gold.size());
    std::vector<LabelVector> g, p;
    for (size_t j = 0; j < gold.size(); ++j) {
      LabelVector gv(labels), pv(labels);
      for (int b = 0; b < labels; ++b) {
        if (coin(rng)) gold[j].insert(b), gv.set(b);
        if (coin(rng)) pred[j].insert(b), pv.set(b);
      }
      g.push_back(gv);
      p.push_back(pv);
    }
    oracle::Counts counts = oracle::MicroCounts(gold, pred);
    PrecisionRecall micro = MultilabelEval(g, p).micro;
    if (micro.tp != counts.tp || micro.fp != counts.fp || micro.fn != counts.fn ||
        std::abs(micro.f1 - oracle::MicroF1(counts)) > 1e-12) {
      ++f1_mismatches;
    }
  }
  c.That(f1_mismatches == 0, std::to_string(f1_mismatches) + " micro-F1 mismatches");
}

void TemplateDslCriterion(Check &c) {
  const TemplateSet &set = *ShippedTemplates();
  c.That(set.size() == 24, "template count " + std::to_string(set.size()));
  std::map<size_t, std::set<std::string>> by_arity;
  for (const Template &t : set.templates()) by_arity[t.arity()].insert(t.id);
  c.That(by_arity[3] == std::set<std::string>{"CLS2", "CMP2"}, "3-slot templates");
  c.That(by_arity[1] == std::set<std::string>{"PR1", "EX1", "EX3", "CLR1", "CLR2",
                                              "GR1", "GS2"},
         "1-slot templates");
  c.That(by_arity[2].size() == 15, "2-slot template count");

  std::mt19937_64 rng(10000);
  int failures = 0;
  for (int i = 0; i < 10000; ++i) {
    std::vector<std::string> slots;
    std::string text = oracle::RandomPatternText(rng, &slots);
    TemplatePattern pattern = ParsePattern(text);
    Template t;
    t.id = "RT1";
    t.slots = pattern.slots();
    t.surface_forms.emplace("en", pattern);
    FillerMap identity;
    for (const auto &slot : slots) identity[slot] = "{" + slot + "}";
    if (pattern.ToString() != text || pattern.slots() != slots ||
        ParsePattern(pattern.ToString()) != pattern ||
        Render(t, "en", identity) != text) {
      ++failures;
    }
  }
  c.That(failures == 0, std::to_string(failures) + " round-trip failures");
}

void BenchmarkCriterion(Check &c) {
  for (const char *name : {"mini_corpus", "release_fixture"}) {
    Corpus corpus = LoadCorpus(DataDir() / name);
    BenchmarkReport report = RunBenchmark(corpus, {});
    for (const ModelReport &m : report.models) {
      if (m.name == "gold") {
        c.That(m.selection.micro.f1 == 1.0, std::string(name) + ": gold micro-F1");
      } else if (m.name == "empty") {
        c.That(m.selection.micro.f1 == 0.0, std::string(name) + ": empty micro-F1");
      }
    }
    std::string first = ToJson(report, corpus.templates()).dump(2) + "\n";
    std::string second =
        ToJson(RunBenchmark(corpus, {}), corpus.templates()).dump(2) + "\n";
    c.That(first == second, std::string(name) + ": report not deterministic");
    std::string golden = std::string("benchmark_") +
                         (std::string(name) == "mini_corpus" ? "mini" : "release") +
                         ".json";
    c.That(first == ReadFile(testing::GoldenDir() / golden),
           std::string(name) + ": report differs from " + golden);
  }
}

void ServicePipelineCriterion(Check &c) {
  const std::filesystem::path mini = DataDir() / "mini_corpus";
  Corpus source = LoadCorpus(mini);
  c.That(source.comments().size() == 20, "fixture does not have 20 items");
  std::vector<std::string> order;
  for (const auto &comment : source.comments()) order.push_back(comment.id);

  AnnotationService service;
  nlohmann::json created = service.CreateProject(
      {{"id", "acceptance"},
       {"corpus", mini.string()},
       {"workflow", "TemplateApplication"},
       {"overlap_fraction", 0.5},
       {"annotators", {"A", "B"}},
       {"seed", 1}});
  c.That(created["project"]["overlap_items"] == 10, "overlap items != 10");
  auto session = testing::RunSession(service, "acceptance", *ShippedTemplates(), order);
  c.That(session.tasks == 30, "tasks issued " + std::to_string(session.tasks));

  testing::TempDir dir;
  service.Export("acceptance", dir.path());
  auto issues = ValidateCorpusDir(dir.path());
  c.That(issues.empty(), "export has " + std::to_string(issues.size()) + " issues");
  Corpus exported = LoadCorpus(dir.path());
  KappaResult k = CohenKappa(TemplateSelectionData(exported, true));
  c.That(k.items == 10, "kappa items " + std::to_string(k.items));

  std::map<std::string, int> code;
  for (const auto &label : testing::SessionLabels()) code.emplace(label, code.size());
  std::vector<std::pair<int, int>> pairs;
  for (const auto &[item, by] : session.labels) {
    if (by.size() == 2) pairs.emplace_back(code[by.at("A")], code[by.at("B")]);
  }
  c.Near(k.kappa, oracle::Kappa(pairs), 1e-12, "exported kappa vs oracle");

  const std::string item = exported.diagnoses().front().comment_id;
  const std::string annotator = exported.diagnoses().front().annotator_id;
  bool conflict = false;
  try {
    service.Submit("acceptance", annotator, item,
                   {{"label", std::string(kNotApplicable)}}, 0);
  } catch (const Error &e) {
    conflict = e.code() == ErrorCode::kRevisionConflict;
  }
  c.That(conflict, "stale revision was not rejected with RevisionConflict");
}

}  // namespace
}  // namespace typic

int main() {
  using namespace typic;
  const std::vector<Criterion> criteria = {
      {"corpus stats", 5.0, CorpusStatsCriterion},
      {"expressiveness coverage 757/821", 0, ExpressivenessCriterion},
      {"uniqueness kappa 0.517, slots 65/73", 0, UniquenessCriterion},
      {"informativeness 857/1090, ordinal alpha 0.265", 0, InformativenessCriterion},
      {"extractability and diagnoses per target", 0, AnalysesCriterion},
      {"metric oracles", 30.0, MetricOraclesCriterion},
      {"template DSL", 0, TemplateDslCriterion},
      {"end-to-end benchmark", 0, BenchmarkCriterion},
      {"service pipeline", 0, ServicePipelineCriterion},
  };
  int failed = 0;
  for (const Criterion &criterion : criteria) {
    Check check;
    auto start = std::chrono::steady_clock::now();
    try {
      criterion.body(check);
    } catch (const std::exception &e) {
      check.That(false, std::string("exception: ") + e.what());
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (criterion.time_limit_s > 0 && seconds >= criterion.time_limit_s) {
      check.That(false, "took longer than the time limit");
    }
    bool ok = check.failures().empty();
    if (!ok) ++failed;
    std::printf("%s  %-48s %7.3fs\n", ok ? "PASS" : "FAIL", criterion.name, seconds);
    for (const std::string &f : check.failures()) std::printf("      %s\n", f.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
