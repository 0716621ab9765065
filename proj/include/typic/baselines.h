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

#ifndef TYPIC_BASELINES_H_
#define TYPIC_BASELINES_H_

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "typic/chunker.h"
#include "typic/corpus.h"
#include "typic/multilabel.h"
#include "typic/tokenizer.h"

namespace typic {

// One (counterargument, target) pair of the template-selection task.
struct SelectionInstance {
  std::string topic_id;
  std::string counterargument_id;
  std::vector<int> target;
  // Target sentences joined by a space.
  std::string target_text;
  std::vector<std::string> comment_ids;
  // Union of every annotator's templates for this target.
  LabelVector gold;
};

// Groups `diagnoses` by (counterargument, target). NotApplicable diagnoses
// contribute an instance but no label. Instances follow first appearance.
std::vector<SelectionInstance> BuildSelectionInstances(
    const Corpus &corpus, std::span<const TemplatedDiagnosis> diagnoses);

struct InstancePartition {
  std::vector<SelectionInstance> dev;
  std::vector<SelectionInstance> eval;
};

// An instance belongs to the side of its first comment.
InstancePartition PartitionInstances(
    std::span<const SelectionInstance> instances, const Split &split);

// One templated diagnosis of the slot-filling task.
struct FillingInstance {
  std::string diagnosis_id;
  std::string template_id;
  Counterargument counterargument;
  std::vector<Point> original;
  std::vector<int> target;
  std::map<SlotName, Filler> gold;
};

// NotApplicable diagnoses are skipped.
std::vector<FillingInstance> BuildFillingInstances(
    const Corpus &corpus, std::span<const TemplatedDiagnosis> diagnoses);

class Selector {
 public:
  virtual ~Selector() = default;
  virtual LabelVector Predict(const SelectionInstance &instance) const = 0;
};

class SlotFiller {
 public:
  virtual ~SlotFiller() = default;
  virtual std::map<SlotName, Filler> Fill(
      const FillingInstance &instance) const = 0;
};

// Replays the gold labels.
class GoldSelector : public Selector {
 public:
  LabelVector Predict(const SelectionInstance &instance) const override {
    return instance.gold;
  }
};

// Predicts no template.
class EmptySelector : public Selector {
 public:
  LabelVector Predict(const SelectionInstance &instance) const override {
    return LabelVector(instance.gold.dimension());
  }
};

// Predicts the k most frequent dev templates for every instance. Ties go
// to the template listed first; templates never seen in dev are not used.
class MajoritySelector : public Selector {
 public:
  MajoritySelector(std::span<const SelectionInstance> dev, int k = 1);

  LabelVector Predict(const SelectionInstance &instance) const override;
  const LabelVector &constant() const { return constant_; }

 private:
  LabelVector constant_;
};

// Union of the gold labels of the k dev instances whose target sentences
// have the highest Jaccard overlap of normalized tokens. Ties go to the
// earlier dev instance.
class LexicalKnnSelector : public Selector {
 public:
  LexicalKnnSelector(std::span<const SelectionInstance> dev, int k = 1,
                     std::string_view tokenizer_id = kDefaultTokenizer);

  LabelVector Predict(const SelectionInstance &instance) const override;

  // Normalized token set used for similarity.
  std::set<std::string> TokenSet(std::string_view text) const;

 private:
  std::vector<SelectionInstance> dev_;
  std::vector<std::set<std::string>> dev_tokens_;
  int k_;
  std::unique_ptr<Tokenizer> tokenizer_;
};

double Jaccard(const std::set<std::string> &a, const std::set<std::string> &b);

// Replays the gold fillers.
class GoldFiller : public SlotFiller {
 public:
  std::map<SlotName, Filler> Fill(
      const FillingInstance &instance) const override {
    return instance.gold;
  }
};

// Leaves every slot empty.
class EmptyFiller : public SlotFiller {
 public:
  explicit EmptyFiller(const TemplateSet &templates) : templates_(templates) {}
  std::map<SlotName, Filler> Fill(
      const FillingInstance &instance) const override;

 private:
  const TemplateSet &templates_;
};

// Candidate phrase for slot filling.
struct FillCandidate {
  Chunk chunk;
  // "counterargument" or "original:<point id>".
  std::string document;
  bool in_target = false;
};

// Chunks of the target sentences, then of the rest of the counterargument,
// then of the original argument points, in document order.
std::vector<FillCandidate> FillCandidates(const Counterargument &ca,
                                          std::span<const Point> original,
                                          std::span<const int> target,
                                          const Chunker &chunker);

// Fills each slot with the candidate sharing most content words with the
// literal text next to the slot, then most words with the original
// argument, then not already used for another slot, then earliest.
// Templates listed in `unsupported` get empty NotExtractable fillers.
class ExtractiveFiller : public SlotFiller {
 public:
  explicit ExtractiveFiller(const TemplateSet &templates,
                            std::set<std::string> unsupported = {"GS2"},
                            std::string_view tokenizer_id = kDefaultTokenizer);

  std::map<SlotName, Filler> Fill(
      const FillingInstance &instance) const override;

  std::map<SlotName, Filler> Fill(const Template &tmpl,
                                  const Counterargument &ca,
                                  std::span<const Point> original,
                                  std::span<const int> target) const;

  // Folded content words of the literal segments adjacent to `slot` in
  // every surface form.
  std::set<std::string> ContextWords(const Template &tmpl,
                                     const SlotName &slot) const;

 private:
  const TemplateSet &templates_;
  std::set<std::string> unsupported_;
  std::unique_ptr<Tokenizer> tokenizer_;
  BoundaryChunker chunker_;
};

}  // namespace typic

#endif  // TYPIC_BASELINES_H_
