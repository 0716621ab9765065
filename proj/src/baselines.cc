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

#include "typic/baselines.h"

#include <algorithm>
#include <numeric>
#include <tuple>
#include <unordered_set>

#include "typic/error.h"
#include "typic/utf8.h"

namespace typic {
namespace {

std::string JoinSentences(const Corpus &corpus, const Counterargument &ca,
                          std::span<const int> target) {
  std::string out;
  for (int index : target) {
    if (!out.empty()) out += ' ';
    out += corpus.SentenceText(ca, index);
  }
  return out;
}

int64_t CountIn(const std::vector<std::string> &tokens,
                const std::set<std::string> &words) {
  std::set<std::string_view> seen;
  for (const std::string &t : tokens) {
    if (words.count(t)) seen.insert(t);
  }
  return static_cast<int64_t>(seen.size());
}

}  // namespace

std::vector<SelectionInstance> BuildSelectionInstances(
    const Corpus &corpus, std::span<const TemplatedDiagnosis> diagnoses) {
  const TemplateSet &templates = corpus.templates();
  std::vector<SelectionInstance> out;
  std::map<std::pair<std::string, std::vector<int>>, size_t> index;
  for (const TemplatedDiagnosis &d : diagnoses) {
    const DiagnosticComment *comment = corpus.FindComment(d.comment_id);
    if (comment == nullptr) {
      throw Error(ErrorCode::kDanglingReference,
                  d.id + ": unknown comment " + d.comment_id);
    }
    auto key = std::make_pair(comment->counterargument_id, comment->target);
    auto [it, inserted] = index.try_emplace(key, out.size());
    if (inserted) {
      const Counterargument &ca =
          *corpus.FindCounterargument(comment->counterargument_id);
      SelectionInstance instance;
      instance.topic_id = ca.topic_id;
      instance.counterargument_id = ca.id;
      instance.target = comment->target;
      instance.target_text = JoinSentences(corpus, ca, comment->target);
      instance.gold = LabelVector(templates.size());
      out.push_back(std::move(instance));
    }
    SelectionInstance &instance = out[it->second];
    if (std::find(instance.comment_ids.begin(), instance.comment_ids.end(),
                  comment->id) == instance.comment_ids.end()) {
      instance.comment_ids.push_back(comment->id);
    }
    if (!d.label.is_not_applicable()) {
      instance.gold.set(*templates.IndexOf(d.label.name()));
    }
  }
  return out;
}

InstancePartition PartitionInstances(
    std::span<const SelectionInstance> instances, const Split &split) {
  std::unordered_set<std::string> dev(split.dev.begin(), split.dev.end());
  std::unordered_set<std::string> eval(split.eval.begin(), split.eval.end());
  InstancePartition out;
  for (const SelectionInstance &instance : instances) {
    if (instance.comment_ids.empty()) continue;
    const std::string &first = instance.comment_ids.front();
    if (dev.count(first)) {
      out.dev.push_back(instance);
    } else if (eval.count(first)) {
      out.eval.push_back(instance);
    }
  }
  return out;
}

std::vector<FillingInstance> BuildFillingInstances(
    const Corpus &corpus, std::span<const TemplatedDiagnosis> diagnoses) {
  std::vector<FillingInstance> out;
  for (const TemplatedDiagnosis &d : diagnoses) {
    if (d.label.is_not_applicable()) continue;
    const DiagnosticComment *comment = corpus.FindComment(d.comment_id);
    if (comment == nullptr) {
      throw Error(ErrorCode::kDanglingReference,
                  d.id + ": unknown comment " + d.comment_id);
    }
    FillingInstance instance;
    instance.diagnosis_id = d.id;
    instance.template_id = d.label.name();
    instance.counterargument =
        *corpus.FindCounterargument(comment->counterargument_id);
    instance.original = corpus.TopicOfComment(*comment).points;
    instance.target = comment->target;
    instance.gold = d.fillers;
    out.push_back(std::move(instance));
  }
  return out;
}

MajoritySelector::MajoritySelector(std::span<const SelectionInstance> dev,
                                   int k) {
  if (dev.empty()) throw Error(ErrorCode::kEmptyDev, "majority: empty dev");
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "majority: k < 1");
  size_t dimension = dev.front().gold.dimension();
  std::vector<int64_t> counts(dimension, 0);
  for (const SelectionInstance &instance : dev) {
    if (instance.gold.dimension() != dimension) {
      throw Error(ErrorCode::kDimensionMismatch, "majority: dev dimensions");
    }
    for (size_t l = 0; l < dimension; ++l) counts[l] += instance.gold.test(l);
  }
  std::vector<size_t> order(dimension);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return counts[a] > counts[b]; });
  constant_ = LabelVector(dimension);
  for (size_t i = 0; i < order.size() && i < static_cast<size_t>(k); ++i) {
    if (counts[order[i]] > 0) constant_.set(order[i]);
  }
}

LabelVector MajoritySelector::Predict(const SelectionInstance &) const {
  return constant_;
}

double Jaccard(const std::set<std::string> &a,
               const std::set<std::string> &b) {
  if (a.empty() && b.empty()) return 0.0;
  size_t common = 0;
  for (const std::string &t : a) common += b.count(t);
  return static_cast<double>(common) /
         static_cast<double>(a.size() + b.size() - common);
}

LexicalKnnSelector::LexicalKnnSelector(std::span<const SelectionInstance> dev,
                                       int k, std::string_view tokenizer_id)
    : dev_(dev.begin(), dev.end()),
      k_(k),
      tokenizer_(MakeTokenizer(tokenizer_id)) {
  if (dev_.empty()) throw Error(ErrorCode::kEmptyDev, "knn: empty dev");
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "knn: k < 1");
  for (const SelectionInstance &instance : dev_) {
    dev_tokens_.push_back(TokenSet(instance.target_text));
  }
}

std::set<std::string> LexicalKnnSelector::TokenSet(
    std::string_view text) const {
  std::vector<std::string> tokens = NormalizedTokens(*tokenizer_, text);
  return {tokens.begin(), tokens.end()};
}

LabelVector LexicalKnnSelector::Predict(
    const SelectionInstance &instance) const {
  std::set<std::string> query = TokenSet(instance.target_text);
  std::vector<double> similarity(dev_.size());
  for (size_t i = 0; i < dev_.size(); ++i) {
    similarity[i] = Jaccard(query, dev_tokens_[i]);
  }
  std::vector<size_t> order(dev_.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return similarity[a] > similarity[b];
  });
  LabelVector out(dev_.front().gold.dimension());
  for (size_t i = 0; i < order.size() && i < static_cast<size_t>(k_); ++i) {
    const LabelVector &gold = dev_[order[i]].gold;
    for (size_t l = 0; l < out.dimension(); ++l) {
      if (gold.test(l)) out.set(l);
    }
  }
  return out;
}

std::map<SlotName, Filler> EmptyFiller::Fill(
    const FillingInstance &instance) const {
  std::map<SlotName, Filler> out;
  for (const SlotName &slot : templates_.Get(instance.template_id).slots) {
    out[slot] = Filler{};
  }
  return out;
}

std::vector<FillCandidate> FillCandidates(const Counterargument &ca,
                                          std::span<const Point> original,
                                          std::span<const int> target,
                                          const Chunker &chunker) {
  std::vector<FillCandidate> out;
  std::vector<size_t> bytes = CodePointBoundaries(ca.text);
  auto add_sentence = [&](size_t index, bool in_target) {
    const CharSpan &s = ca.sentences.at(index);
    std::string_view text(ca.text.data() + bytes[s.begin],
                          bytes[s.end] - bytes[s.begin]);
    for (Chunk &chunk : chunker.Split(text)) {
      chunk.span.begin += s.begin;
      chunk.span.end += s.begin;
      out.push_back({std::move(chunk), std::string(kCounterargumentDocument),
                     in_target});
    }
  };
  std::set<int> targets(target.begin(), target.end());
  for (int index : targets) {
    if (index < 0 || static_cast<size_t>(index) >= ca.sentences.size()) {
      throw Error(ErrorCode::kSpanError,
                  ca.id + ": target " + std::to_string(index));
    }
    add_sentence(index, true);
  }
  for (size_t i = 0; i < ca.sentences.size(); ++i) {
    if (!targets.count(static_cast<int>(i))) add_sentence(i, false);
  }
  for (const Point &point : original) {
    for (Chunk &chunk : chunker.Split(point.text)) {
      out.push_back({std::move(chunk), "original:" + point.id, false});
    }
  }
  return out;
}

ExtractiveFiller::ExtractiveFiller(const TemplateSet &templates,
                                   std::set<std::string> unsupported,
                                   std::string_view tokenizer_id)
    : templates_(templates),
      unsupported_(std::move(unsupported)),
      tokenizer_(MakeTokenizer(tokenizer_id)),
      chunker_(tokenizer_id) {}

std::set<std::string> ExtractiveFiller::ContextWords(
    const Template &tmpl, const SlotName &slot) const {
  std::set<std::string> out;
  auto add = [&](const Segment &segment) {
    if (segment.is_slot()) return;
    for (std::string &t : NormalizedTokens(*tokenizer_, segment.text)) {
      if (!BoundaryChunker::IsBoundaryWord(t)) out.insert(std::move(t));
    }
  };
  for (const auto &[locale, pattern] : tmpl.surface_forms) {
    const std::vector<Segment> &segments = pattern.segments();
    for (size_t i = 0; i < segments.size(); ++i) {
      if (!segments[i].is_slot() || segments[i].text != slot) continue;
      if (i > 0) add(segments[i - 1]);
      if (i + 1 < segments.size()) add(segments[i + 1]);
    }
  }
  return out;
}

std::map<SlotName, Filler> ExtractiveFiller::Fill(
    const FillingInstance &instance) const {
  return Fill(templates_.Get(instance.template_id), instance.counterargument,
              instance.original, instance.target);
}

std::map<SlotName, Filler> ExtractiveFiller::Fill(
    const Template &tmpl, const Counterargument &ca,
    std::span<const Point> original, std::span<const int> target) const {
  std::map<SlotName, Filler> out;
  if (unsupported_.count(tmpl.id)) {
    for (const SlotName &slot : tmpl.slots) {
      out[slot] = Filler{"", std::nullopt, Extractability::kNotExtractable};
    }
    return out;
  }
  std::vector<FillCandidate> candidates =
      FillCandidates(ca, original, target, chunker_);
  if (candidates.empty()) {
    throw Error(ErrorCode::kNoCandidates, ca.id + ": no candidate phrases");
  }
  std::set<std::string> original_words;
  for (const Point &point : original) {
    for (std::string &t : NormalizedTokens(*tokenizer_, point.text)) {
      if (!BoundaryChunker::IsBoundaryWord(t)) {
        original_words.insert(std::move(t));
      }
    }
  }
  std::vector<int64_t> grounding(candidates.size(), 0);
  for (size_t i = 0; i < candidates.size(); ++i) {
    if (candidates[i].document == kCounterargumentDocument) {
      grounding[i] = CountIn(candidates[i].chunk.tokens, original_words);
    }
  }
  std::vector<bool> used(candidates.size(), false);
  for (const SlotName &slot : tmpl.slots) {
    std::set<std::string> context = ContextWords(tmpl, slot);
    size_t best = 0;
    std::tuple<int64_t, int64_t, bool> best_score{-1, -1, false};
    for (size_t i = 0; i < candidates.size(); ++i) {
      std::tuple<int64_t, int64_t, bool> score{
          CountIn(candidates[i].chunk.tokens, context), grounding[i],
          !used[i]};
      if (score > best_score) {
        best_score = score;
        best = i;
      }
    }
    used[best] = true;
    const FillCandidate &pick = candidates[best];
    out[slot] = Filler{pick.chunk.text,
                       SourceSpan{pick.document, pick.chunk.span},
                       Extractability::kExtractable};
  }
  return out;
}

}  // namespace typic
