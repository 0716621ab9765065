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

#include "typic/benchmark.h"

#include <cstdio>
#include <unordered_set>

#include "typic/error.h"

namespace typic {

std::vector<std::string> AvailableModels() {
  return {"gold", "empty", "majority", "knn"};
}

BenchmarkModel MakeModel(const std::string &name, const TemplateSet &templates,
                         std::span<const SelectionInstance> dev,
                         const BenchmarkOptions &options) {
  if (name == "gold") {
    return {name, std::make_shared<GoldSelector>(),
            std::make_shared<GoldFiller>()};
  }
  if (name == "empty") {
    return {name, std::make_shared<EmptySelector>(),
            std::make_shared<EmptyFiller>(templates)};
  }
  auto filler = std::make_shared<ExtractiveFiller>(
      templates, std::set<std::string>{"GS2"}, options.tokenizer);
  if (name == "majority") {
    return {name, std::make_shared<MajoritySelector>(dev, options.majority_k),
            filler};
  }
  if (name == "knn") {
    return {name,
            std::make_shared<LexicalKnnSelector>(dev, options.knn_k,
                                                 options.tokenizer),
            filler};
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown model " + name);
}

std::vector<ModelReport> Evaluate(std::span<const BenchmarkModel> models,
                                  std::span<const SelectionInstance> eval,
                                  std::span<const FillingInstance> fillings,
                                  const Tokenizer &tokenizer, int ngram) {
  if (eval.empty()) throw Error(ErrorCode::kEmptyInput, "empty eval split");
  std::vector<LabelVector> gold;
  gold.reserve(eval.size());
  for (const SelectionInstance &instance : eval) gold.push_back(instance.gold);
  std::vector<ModelReport> out;
  for (const BenchmarkModel &model : models) {
    ModelReport report;
    report.name = model.name;
    std::vector<LabelVector> pred;
    pred.reserve(eval.size());
    for (const SelectionInstance &instance : eval) {
      pred.push_back(model.selector->Predict(instance));
    }
    report.selection = MultilabelEval(gold, pred);

    SlotSummary &s = report.filling;
    int64_t exact = 0, lenient = 0;
    for (const FillingInstance &instance : fillings) {
      std::map<SlotName, Filler> predicted = model.filler->Fill(instance);
      for (const auto &[slot, gold_filler] : instance.gold) {
        ++s.slots;
        auto it = predicted.find(slot);
        if (it == predicted.end() || it->second.text.empty()) {
          ++s.empty_predictions;
          continue;
        }
        SlotOverlapScore score =
            SlotOverlap(it->second.text, gold_filler.text, tokenizer, ngram);
        s.precision += score.precision;
        s.recall += score.recall;
        s.f1 += score.f1;
        exact += score.exact_match;
        lenient += score.f1 >= 0.5;
      }
    }
    if (s.slots > 0) {
      double n = static_cast<double>(s.slots);
      s.precision /= n;
      s.recall /= n;
      s.f1 /= n;
      s.exact_match_rate = static_cast<double>(exact) / n;
      s.lenient_proxy_rate = static_cast<double>(lenient) / n;
    }
    out.push_back(std::move(report));
  }
  return out;
}

BenchmarkReport RunBenchmark(const Corpus &corpus,
                             const BenchmarkOptions &options) {
  BenchmarkReport report;
  report.corpus = corpus.manifest().name;
  report.seed = options.seed;
  report.ngram = options.ngram;
  Split split;
  if (corpus.split().has_value()) {
    split = *corpus.split();
    report.split_source = "manifest";
  } else {
    split = SplitComments(corpus, options.dev_ratio, options.seed);
    report.split_source = "seeded";
  }
  std::vector<SelectionInstance> instances =
      BuildSelectionInstances(corpus, corpus.diagnoses());
  InstancePartition parts = PartitionInstances(instances, split);

  std::unordered_set<std::string> eval_comments(split.eval.begin(),
                                                split.eval.end());
  std::vector<TemplatedDiagnosis> eval_diagnoses;
  for (const TemplatedDiagnosis &d : corpus.diagnoses()) {
    if (eval_comments.count(d.comment_id)) eval_diagnoses.push_back(d);
  }
  std::vector<FillingInstance> fillings =
      BuildFillingInstances(corpus, eval_diagnoses);

  report.dev_instances = static_cast<int64_t>(parts.dev.size());
  report.eval_instances = static_cast<int64_t>(parts.eval.size());
  report.eval_fillings = static_cast<int64_t>(fillings.size());

  std::vector<BenchmarkModel> models;
  for (const std::string &name : options.models) {
    models.push_back(MakeModel(name, corpus.templates(), parts.dev, options));
  }
  std::unique_ptr<Tokenizer> tokenizer = MakeTokenizer(options.tokenizer);
  report.models =
      Evaluate(models, parts.eval, fillings, *tokenizer, options.ngram);
  return report;
}

nlohmann::json ToJson(const SlotSummary &summary) {
  return {{"slots", summary.slots},
          {"empty_predictions", summary.empty_predictions},
          {"precision", summary.precision},
          {"recall", summary.recall},
          {"f1", summary.f1},
          {"exact_match_rate", summary.exact_match_rate},
          {"lenient_proxy_rate", summary.lenient_proxy_rate}};
}

nlohmann::json ToJson(const BenchmarkReport &report,
                      const TemplateSet &templates) {
  nlohmann::json models = nlohmann::json::array();
  for (const ModelReport &model : report.models) {
    models.push_back({{"name", model.name},
                      {"selection", ToJson(model.selection, templates)},
                      {"filling", ToJson(model.filling)}});
  }
  return {{"corpus", report.corpus},
          {"split_source", report.split_source},
          {"seed", report.seed},
          {"ngram", report.ngram},
          {"dev_instances", report.dev_instances},
          {"eval_instances", report.eval_instances},
          {"eval_fillings", report.eval_fillings},
          {"models", models}};
}

std::string FormatTable(const BenchmarkReport &report) {
  std::string out;
  char line[256];
  std::snprintf(line, sizeof(line),
                "corpus %s  split %s  dev %lld  eval %lld  fillings %lld\n",
                report.corpus.c_str(), report.split_source.c_str(),
                static_cast<long long>(report.dev_instances),
                static_cast<long long>(report.eval_instances),
                static_cast<long long>(report.eval_fillings));
  out += line;
  std::snprintf(line, sizeof(line), "%-10s %8s %8s %8s %8s %8s | %8s %8s %8s %8s\n",
                "model", "micro-P", "micro-R", "micro-F1", "macro-F1",
                "subset", "slot-F1", "exact", "F1>=.5*", "empty");
  out += line;
  for (const ModelReport &m : report.models) {
    std::snprintf(line, sizeof(line),
                  "%-10s %8.4f %8.4f %8.4f %8.4f %8.4f | %8.4f %8.4f %8.4f %8lld\n",
                  m.name.c_str(), m.selection.micro.precision,
                  m.selection.micro.recall, m.selection.micro.f1,
                  m.selection.macro_f1, m.selection.subset_accuracy,
                  m.filling.f1, m.filling.exact_match_rate,
                  m.filling.lenient_proxy_rate,
                  static_cast<long long>(m.filling.empty_predictions));
    out += line;
  }
  out += "* token-F1 >= 0.5 is a machine proxy for lenient matching\n";
  return out;
}

}  // namespace typic
