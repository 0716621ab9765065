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

#include "typic/multilabel.h"

#include <algorithm>
#include <map>

#include "typic/error.h"

namespace typic {
namespace {

double SafeRatio(int64_t num, int64_t den, bool vacuous) {
  if (den == 0) return vacuous ? 1.0 : 0.0;
  return static_cast<double>(num) / static_cast<double>(den);
}

double Harmonic(double p, double r) {
  return p + r == 0.0 ? 0.0 : 2.0 * p * r / (p + r);
}

std::map<std::string, int64_t> NGramBag(const std::vector<std::string> &tokens,
                                        int n) {
  std::map<std::string, int64_t> bag;
  for (size_t i = 0; i + n <= tokens.size(); ++i) {
    std::string gram = tokens[i];
    for (int k = 1; k < n; ++k) gram += '\x1f' + tokens[i + k];
    ++bag[gram];
  }
  return bag;
}

}  // namespace

LabelVector LabelVector::FromLabels(const TemplateSet &templates,
                                    std::span<const Label> labels) {
  LabelVector vector(templates.size());
  for (const Label &label : labels) {
    if (auto index = templates.IndexOf(label.name())) vector.set(*index);
  }
  return vector;
}

size_t LabelVector::count() const {
  return static_cast<size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

std::vector<std::string> LabelVector::Ids(const TemplateSet &templates) const {
  std::vector<std::string> ids;
  for (size_t i = 0; i < bits_.size() && i < templates.size(); ++i) {
    if (bits_[i]) ids.push_back(templates.templates()[i].id);
  }
  return ids;
}

PrecisionRecall ScoreCounts(int64_t tp, int64_t fp, int64_t fn) {
  PrecisionRecall pr;
  pr.tp = tp;
  pr.fp = fp;
  pr.fn = fn;
  bool vacuous = tp + fp + fn == 0;
  pr.precision = SafeRatio(tp, tp + fp, vacuous);
  pr.recall = SafeRatio(tp, tp + fn, vacuous);
  pr.f1 = vacuous ? 1.0 : Harmonic(pr.precision, pr.recall);
  return pr;
}

MultilabelReport MultilabelEval(std::span<const LabelVector> gold,
                                std::span<const LabelVector> pred) {
  if (gold.size() != pred.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "gold has " + std::to_string(gold.size()) +
                    " instances, prediction " + std::to_string(pred.size()));
  }
  if (gold.empty()) throw Error(ErrorCode::kEmptyInput, "no instances");
  const size_t dimension = gold.front().dimension();
  std::vector<int64_t> tp(dimension), fp(dimension), fn(dimension);
  MultilabelReport report;
  report.instances = static_cast<int64_t>(gold.size());
  double exact = 0.0;
  double jaccard = 0.0;
  for (size_t i = 0; i < gold.size(); ++i) {
    if (gold[i].dimension() != dimension || pred[i].dimension() != dimension) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "instance " + std::to_string(i) + " has a vector of the " +
                      "wrong dimension");
    }
    int64_t both = 0, either = 0;
    for (size_t l = 0; l < dimension; ++l) {
      bool g = gold[i].test(l);
      bool p = pred[i].test(l);
      both += g && p;
      either += g || p;
      tp[l] += g && p;
      fp[l] += !g && p;
      fn[l] += g && !p;
    }
    exact += gold[i] == pred[i] ? 1.0 : 0.0;
    jaccard += either == 0 ? 1.0
                           : static_cast<double>(both) /
                                 static_cast<double>(either);
  }
  report.subset_accuracy = exact / static_cast<double>(gold.size());
  report.example_accuracy = jaccard / static_cast<double>(gold.size());
  int64_t total_tp = 0, total_fp = 0, total_fn = 0;
  double macro = 0.0;
  for (size_t l = 0; l < dimension; ++l) {
    report.per_label.push_back(ScoreCounts(tp[l], fp[l], fn[l]));
    macro += report.per_label.back().f1;
    total_tp += tp[l];
    total_fp += fp[l];
    total_fn += fn[l];
  }
  report.micro = ScoreCounts(total_tp, total_fp, total_fn);
  report.macro_f1 = dimension == 0 ? 1.0 : macro / static_cast<double>(dimension);
  return report;
}

SlotOverlapScore SlotOverlap(std::string_view pred, std::string_view gold,
                             const Tokenizer &tokenizer, int n) {
  if (pred.empty() || gold.empty()) {
    throw Error(ErrorCode::kEmptyInput, "slot overlap needs two fillers");
  }
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "n-gram order < 1");
  std::vector<std::string> pred_tokens = NormalizedTokens(tokenizer, pred);
  std::vector<std::string> gold_tokens = NormalizedTokens(tokenizer, gold);
  SlotOverlapScore score;
  score.exact_match = pred_tokens == gold_tokens;
  std::map<std::string, int64_t> pred_bag = NGramBag(pred_tokens, n);
  std::map<std::string, int64_t> gold_bag = NGramBag(gold_tokens, n);
  int64_t pred_total = 0, gold_total = 0, common = 0;
  for (const auto &[gram, count] : pred_bag) {
    pred_total += count;
    auto it = gold_bag.find(gram);
    if (it != gold_bag.end()) common += std::min(count, it->second);
  }
  for (const auto &[gram, count] : gold_bag) gold_total += count;
  score.precision = SafeRatio(common, pred_total, false);
  score.recall = SafeRatio(common, gold_total, false);
  score.f1 = Harmonic(score.precision, score.recall);
  return score;
}

SlotOverlapScore SlotOverlap(std::string_view pred, std::string_view gold,
                             std::string_view tokenizer_id, int n) {
  return SlotOverlap(pred, gold, *MakeTokenizer(tokenizer_id), n);
}

nlohmann::json ToJson(const PrecisionRecall &pr) {
  return {{"tp", pr.tp},         {"fp", pr.fp},         {"fn", pr.fn},
          {"precision", pr.precision}, {"recall", pr.recall}, {"f1", pr.f1}};
}

nlohmann::json ToJson(const MultilabelReport &report,
                      const TemplateSet &templates) {
  nlohmann::json per_label = nlohmann::json::object();
  for (size_t l = 0; l < report.per_label.size() && l < templates.size(); ++l) {
    per_label[templates.templates()[l].id] = ToJson(report.per_label[l]);
  }
  return {{"instances", report.instances},
          {"subset_accuracy", report.subset_accuracy},
          {"example_accuracy", report.example_accuracy},
          {"micro", ToJson(report.micro)},
          {"macro_f1", report.macro_f1},
          {"per_label", per_label}};
}

}  // namespace typic
