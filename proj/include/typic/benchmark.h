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

#ifndef TYPIC_BENCHMARK_H_
#define TYPIC_BENCHMARK_H_

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "typic/baselines.h"
#include "typic/corpus.h"
#include "typic/multilabel.h"

namespace typic {

// A selector paired with a slot filler.
struct BenchmarkModel {
  std::string name;
  std::shared_ptr<const Selector> selector;
  std::shared_ptr<const SlotFiller> filler;
};

struct SlotSummary {
  int64_t slots = 0;
  int64_t empty_predictions = 0;
  double precision = 0.0;  // means over slots
  double recall = 0.0;
  double f1 = 0.0;
  double exact_match_rate = 0.0;
  // Share of slots with token F1 >= 0.5. A machine proxy for the human
  // lenient-match judgment, not a replacement for it.
  double lenient_proxy_rate = 0.0;
};

struct ModelReport {
  std::string name;
  MultilabelReport selection;
  SlotSummary filling;
};

struct BenchmarkReport {
  std::string corpus;
  std::string split_source;  // "manifest" or "seeded"
  uint64_t seed = 0;
  int ngram = 1;
  int64_t dev_instances = 0;
  int64_t eval_instances = 0;
  int64_t eval_fillings = 0;
  std::vector<ModelReport> models;
};

struct BenchmarkOptions {
  std::vector<std::string> models = {"gold", "empty", "majority", "knn"};
  int majority_k = 1;
  int knn_k = 1;
  int ngram = 1;
  // Used only when the corpus has no split.
  uint64_t seed = 13;
  double dev_ratio = 0.25;
  std::string tokenizer = std::string(kDefaultTokenizer);
};

std::vector<std::string> AvailableModels();

// Builds a named model. "majority" and "knn" are fitted on `dev`.
BenchmarkModel MakeModel(const std::string &name, const TemplateSet &templates,
                         std::span<const SelectionInstance> dev,
                         const BenchmarkOptions &options);

// Scores every model on the eval instances and fillings.
std::vector<ModelReport> Evaluate(std::span<const BenchmarkModel> models,
                                  std::span<const SelectionInstance> eval,
                                  std::span<const FillingInstance> fillings,
                                  const Tokenizer &tokenizer, int ngram = 1);

// Main diagnosis layer, corpus split (or a seeded one), requested models.
BenchmarkReport RunBenchmark(const Corpus &corpus,
                             const BenchmarkOptions &options);

nlohmann::json ToJson(const SlotSummary &summary);
nlohmann::json ToJson(const BenchmarkReport &report,
                      const TemplateSet &templates);
std::string FormatTable(const BenchmarkReport &report);

}  // namespace typic

#endif  // TYPIC_BENCHMARK_H_
