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

#include "typic/corpus.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <unordered_set>

#include "typic/tokenizer.h"
#include "typic/utf8.h"

namespace typic {
namespace {

constexpr std::string_view kOriginalPrefix = "original:";

class IssueSink {
 public:
  explicit IssueSink(std::vector<Issue> *issues) : issues_(issues) {}

  void Add(ErrorCode code, const std::string &where,
           const std::string &message) {
    issues_->push_back({code, where, message});
  }

 private:
  std::vector<Issue> *issues_;
};

void ValidateTopics(const CorpusData &data, IssueSink &sink) {
  std::set<std::string> ids;
  for (const Topic &topic : data.topics) {
    if (topic.id.empty()) sink.Add(ErrorCode::kSchemaError, "topic", "empty id");
    if (!ids.insert(topic.id).second) {
      sink.Add(ErrorCode::kInvariantViolation, topic.id, "duplicate topic id");
    }
    if (topic.points.empty() || topic.points.size() > 10) {
      sink.Add(ErrorCode::kInvariantViolation, topic.id,
               "topic needs 1-10 points, has " +
                   std::to_string(topic.points.size()));
    }
    std::set<std::string> point_ids;
    for (const Point &point : topic.points) {
      if (!point_ids.insert(point.id).second) {
        sink.Add(ErrorCode::kInvariantViolation, topic.id,
                 "duplicate point id " + point.id);
      }
    }
  }
}

void ValidateCounterarguments(const CorpusData &data, IssueSink &sink) {
  std::set<std::string> topic_ids;
  for (const Topic &topic : data.topics) topic_ids.insert(topic.id);
  std::set<std::string> ids;
  for (const Counterargument &ca : data.counterarguments) {
    if (!ids.insert(ca.id).second) {
      sink.Add(ErrorCode::kInvariantViolation, ca.id,
               "duplicate counterargument id");
    }
    if (!topic_ids.contains(ca.topic_id)) {
      sink.Add(ErrorCode::kDanglingReference, ca.id,
               "unknown topic " + ca.topic_id);
    }
    if (!IsValidUtf8(ca.text)) {
      sink.Add(ErrorCode::kSchemaError, ca.id, "text is not valid UTF-8");
      continue;
    }
    size_t length = CodePointCount(ca.text);
    size_t previous_end = 0;
    for (size_t i = 0; i < ca.sentences.size(); ++i) {
      const CharSpan &span = ca.sentences[i];
      std::string where = ca.id + " sentence " + std::to_string(i);
      if (span.begin >= span.end) {
        sink.Add(ErrorCode::kSpanError, where, "empty or inverted span");
      } else if (span.end > length) {
        sink.Add(ErrorCode::kSpanError, where,
                 "span ends at " + std::to_string(span.end) +
                     " beyond text length " + std::to_string(length));
      } else if (i > 0 && span.begin < previous_end) {
        sink.Add(ErrorCode::kSpanError, where,
                 "span overlaps or precedes the previous sentence");
      }
      previous_end = span.end;
    }
  }
}

void ValidateComments(const CorpusData &data,
                      const std::unordered_map<std::string, size_t> &cas,
                      IssueSink &sink) {
  std::set<std::string> ids;
  for (const DiagnosticComment &comment : data.comments) {
    if (!ids.insert(comment.id).second) {
      sink.Add(ErrorCode::kInvariantViolation, comment.id,
               "duplicate comment id");
    }
    if (comment.text.empty()) {
      sink.Add(ErrorCode::kInvariantViolation, comment.id, "empty text");
    }
    if (comment.annotator_id.empty()) {
      sink.Add(ErrorCode::kSchemaError, comment.id, "empty annotator id");
    }
    auto ca = cas.find(comment.counterargument_id);
    if (ca == cas.end()) {
      sink.Add(ErrorCode::kDanglingReference, comment.id,
               "unknown counterargument " + comment.counterargument_id);
      continue;
    }
    if (comment.target.empty()) {
      sink.Add(ErrorCode::kInvariantViolation, comment.id, "empty target");
    }
    int sentences =
        static_cast<int>(data.counterarguments[ca->second].sentences.size());
    for (size_t i = 0; i < comment.target.size(); ++i) {
      int index = comment.target[i];
      if (index < 0 || index >= sentences) {
        sink.Add(ErrorCode::kSpanError, comment.id,
                 "target sentence " + std::to_string(index) +
                     " out of range");
      }
      if (i > 0 && index <= comment.target[i - 1]) {
        sink.Add(ErrorCode::kInvariantViolation, comment.id,
                 "target indices must be strictly increasing");
      }
    }
  }
}

void ValidateSource(const SourceSpan &source, const Counterargument &ca,
                    const Topic *topic, const std::string &where,
                    IssueSink &sink) {
  const std::string *text = nullptr;
  if (source.document == kCounterargumentDocument) {
    text = &ca.text;
  } else if (source.document.starts_with(kOriginalPrefix) && topic != nullptr) {
    std::string point_id = source.document.substr(kOriginalPrefix.size());
    for (const Point &point : topic->points) {
      if (point.id == point_id) text = &point.text;
    }
  }
  if (text == nullptr) {
    sink.Add(ErrorCode::kDanglingReference, where,
             "unknown source document " + source.document);
    return;
  }
  if (source.span.begin >= source.span.end ||
      source.span.end > CodePointCount(*text)) {
    sink.Add(ErrorCode::kSpanError, where, "source span outside document");
  }
}

void ValidateDiagnoses(const CorpusData &data, const TemplateSet &templates,
                       const std::unordered_map<std::string, size_t> &cas,
                       IssueSink &sink) {
  std::unordered_map<std::string, const DiagnosticComment *> comments;
  for (const DiagnosticComment &c : data.comments) comments[c.id] = &c;
  std::unordered_map<std::string, const Topic *> topics;
  for (const Topic &t : data.topics) topics[t.id] = &t;

  std::set<std::string> ids;
  auto check = [&](const TemplatedDiagnosis &d) {
    if (!ids.insert(d.id).second) {
      sink.Add(ErrorCode::kInvariantViolation, d.id, "duplicate diagnosis id");
    }
    if (d.annotator_id.empty()) {
      sink.Add(ErrorCode::kSchemaError, d.id, "empty annotator id");
    }
    auto comment = comments.find(d.comment_id);
    if (comment == comments.end()) {
      sink.Add(ErrorCode::kDanglingReference, d.id,
               "unknown comment " + d.comment_id);
      return;
    }
    if (d.label.is_not_applicable()) {
      if (!d.fillers.empty()) {
        sink.Add(ErrorCode::kInvariantViolation, d.id,
                 "NotApplicable diagnosis carries fillers");
      }
      return;
    }
    const Template *tmpl = templates.Find(d.label.name());
    if (tmpl == nullptr) {
      sink.Add(ErrorCode::kDanglingReference, d.id,
               "unknown template " + d.label.name());
      return;
    }
    std::set<SlotName> expected(tmpl->slots.begin(), tmpl->slots.end());
    std::set<SlotName> actual;
    for (const auto &[slot, filler] : d.fillers) actual.insert(slot);
    if (expected != actual) {
      sink.Add(ErrorCode::kInvariantViolation, d.id,
               "filler keys differ from the slots of " + tmpl->id);
    }
    auto ca_it = cas.find(comment->second->counterargument_id);
    const Counterargument *ca =
        ca_it == cas.end() ? nullptr : &data.counterarguments[ca_it->second];
    for (const auto &[slot, filler] : d.fillers) {
      std::string where = d.id + " slot " + slot;
      if (filler.text.empty()) {
        sink.Add(ErrorCode::kInvariantViolation, where, "empty filler");
      }
      bool extractable =
          filler.extractability == Extractability::kExtractable;
      if (filler.source.has_value() != extractable) {
        sink.Add(ErrorCode::kInvariantViolation, where,
                 "source span must be present exactly for Extractable");
      }
      if (filler.source && ca != nullptr) {
        auto topic = topics.find(ca->topic_id);
        ValidateSource(*filler.source, *ca,
                       topic == topics.end() ? nullptr : topic->second, where,
                       sink);
      }
    }
  };
  for (const TemplatedDiagnosis &d : data.diagnoses) check(d);
  for (const TemplatedDiagnosis &d : data.overlap_diagnoses) check(d);
}

void ValidateJudgments(const CorpusData &data, IssueSink &sink) {
  std::unordered_map<std::string, const TemplatedDiagnosis *> diagnoses;
  for (const auto &d : data.diagnoses) diagnoses[d.id] = &d;
  for (const auto &d : data.overlap_diagnoses) diagnoses[d.id] = &d;
  std::set<std::pair<std::string, std::string>> seen;
  for (const InformativenessJudgment &j : data.judgments) {
    std::string where = j.diagnosis_id + "/" + j.worker_id;
    if (j.score < 1 || j.score > 3) {
      sink.Add(ErrorCode::kInvariantViolation, where,
               "score " + std::to_string(j.score) + " not in {1,2,3}");
    }
    if (!seen.emplace(j.diagnosis_id, j.worker_id).second) {
      sink.Add(ErrorCode::kInvariantViolation, where,
               "worker judged the diagnosis twice");
    }
    auto d = diagnoses.find(j.diagnosis_id);
    if (d == diagnoses.end()) {
      sink.Add(ErrorCode::kDanglingReference, where,
               "unknown diagnosis " + j.diagnosis_id);
      continue;
    }
    if (d->second->comment_id != j.comment_id) {
      sink.Add(ErrorCode::kInvariantViolation, where,
               "comment id does not match the diagnosis");
    }
    if (d->second->label.is_not_applicable()) {
      sink.Add(ErrorCode::kInvariantViolation, where,
               "NotApplicable diagnoses cannot be judged");
    }
  }
}

void ValidateSplit(const CorpusData &data, IssueSink &sink) {
  if (!data.split) return;
  std::set<std::string> all;
  for (const auto &c : data.comments) all.insert(c.id);
  std::set<std::string> seen;
  for (const auto *part : {&data.split->dev, &data.split->eval}) {
    for (const std::string &id : *part) {
      if (!all.contains(id)) {
        sink.Add(ErrorCode::kDanglingReference, "split",
                 "unknown comment " + id);
      }
      if (!seen.insert(id).second) {
        sink.Add(ErrorCode::kInvariantViolation, "split",
                 "comment " + id + " listed twice");
      }
    }
  }
  if (seen.size() < all.size()) {
    sink.Add(ErrorCode::kInvariantViolation, "split",
             "split does not cover every comment");
  }
}

// Uniform integer in [0, bound) from a 64-bit engine, by rejection.
uint64_t Bounded(std::mt19937_64 &rng, uint64_t bound) {
  uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  uint64_t value;
  do {
    value = rng();
  } while (value >= limit);
  return value % bound;
}

}  // namespace

std::string_view ExtractabilityName(Extractability value) {
  switch (value) {
    case Extractability::kExtractable: return "Extractable";
    case Extractability::kExtractableWithChanges: return "ExtractableWithChanges";
    case Extractability::kNotExtractable: return "NotExtractable";
  }
  return "";
}

std::string FormatIssue(const Issue &issue) {
  return std::string(ErrorCodeName(issue.code)) + " at " + issue.where + ": " +
         issue.message;
}

std::vector<Issue> ValidateCorpusData(const CorpusData &data,
                                      const TemplateSet &templates) {
  std::vector<Issue> issues;
  IssueSink sink(&issues);
  std::unordered_map<std::string, size_t> cas;
  for (size_t i = 0; i < data.counterarguments.size(); ++i) {
    cas.emplace(data.counterarguments[i].id, i);
  }
  if (!data.manifest.template_set_version.empty() &&
      data.manifest.template_set_version != templates.version()) {
    sink.Add(ErrorCode::kInvariantViolation, "manifest",
             "template set version " + templates.version() +
                 " does not match pinned " +
                 data.manifest.template_set_version);
  }
  ValidateTopics(data, sink);
  ValidateCounterarguments(data, sink);
  ValidateComments(data, cas, sink);
  ValidateDiagnoses(data, templates, cas, sink);
  ValidateJudgments(data, sink);
  ValidateSplit(data, sink);
  return issues;
}

Corpus::Corpus(CorpusData data, std::shared_ptr<const TemplateSet> templates)
    : data_(std::move(data)), templates_(std::move(templates)) {
  std::vector<Issue> issues = ValidateCorpusData(data_, *templates_);
  if (!issues.empty()) {
    throw Error(issues.front().code, FormatIssue(issues.front()));
  }
  for (size_t i = 0; i < data_.topics.size(); ++i) {
    topic_index_.emplace(data_.topics[i].id, i);
  }
  for (size_t i = 0; i < data_.counterarguments.size(); ++i) {
    ca_index_.emplace(data_.counterarguments[i].id, i);
  }
  for (size_t i = 0; i < data_.comments.size(); ++i) {
    comment_index_.emplace(data_.comments[i].id, i);
  }
  for (size_t i = 0; i < data_.diagnoses.size(); ++i) {
    diagnosis_index_.emplace(data_.diagnoses[i].id, std::make_pair(false, i));
  }
  for (size_t i = 0; i < data_.overlap_diagnoses.size(); ++i) {
    diagnosis_index_.emplace(data_.overlap_diagnoses[i].id,
                             std::make_pair(true, i));
  }
}

const Topic *Corpus::FindTopic(std::string_view id) const {
  auto it = topic_index_.find(std::string(id));
  return it == topic_index_.end() ? nullptr : &data_.topics[it->second];
}

const Counterargument *Corpus::FindCounterargument(std::string_view id) const {
  auto it = ca_index_.find(std::string(id));
  return it == ca_index_.end() ? nullptr
                               : &data_.counterarguments[it->second];
}

const DiagnosticComment *Corpus::FindComment(std::string_view id) const {
  auto it = comment_index_.find(std::string(id));
  return it == comment_index_.end() ? nullptr : &data_.comments[it->second];
}

const TemplatedDiagnosis *Corpus::FindDiagnosis(std::string_view id) const {
  auto it = diagnosis_index_.find(std::string(id));
  if (it == diagnosis_index_.end()) return nullptr;
  const auto &layer =
      it->second.first ? data_.overlap_diagnoses : data_.diagnoses;
  return &layer[it->second.second];
}

const Topic &Corpus::TopicOfComment(const DiagnosticComment &comment) const {
  return *FindTopic(FindCounterargument(comment.counterargument_id)->topic_id);
}

std::string_view Corpus::SentenceText(const Counterargument &ca,
                                      int index) const {
  if (index < 0 || index >= static_cast<int>(ca.sentences.size())) {
    throw Error(ErrorCode::kSpanError,
                ca.id + ": no sentence " + std::to_string(index));
  }
  const CharSpan &span = ca.sentences[index];
  return SliceCodePoints(ca.text, span.begin, span.end);
}

Split SplitComments(const Corpus &corpus, double ratio, uint64_t seed) {
  if (corpus.comments().empty()) {
    throw Error(ErrorCode::kEmptyCorpus, "corpus has no comments to split");
  }
  if (!(ratio > 0.0 && ratio < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "split ratio must be in (0, 1)");
  }
  // Strata in order of first appearance.
  std::vector<std::string> order;
  std::map<std::string, std::vector<std::string>> strata;
  for (const DiagnosticComment &comment : corpus.comments()) {
    const std::string &topic = corpus.TopicOfComment(comment).id;
    if (!strata.contains(topic)) order.push_back(topic);
    strata[topic].push_back(comment.id);
  }
  const int64_t total = static_cast<int64_t>(corpus.comments().size());
  const int64_t dev_total = std::llround(ratio * static_cast<double>(total));

  // Largest-remainder allocation of the dev quota.
  std::vector<int64_t> quota(order.size());
  std::vector<std::pair<double, size_t>> remainders;
  int64_t assigned = 0;
  for (size_t i = 0; i < order.size(); ++i) {
    double exact = static_cast<double>(dev_total) *
                   static_cast<double>(strata[order[i]].size()) /
                   static_cast<double>(total);
    quota[i] = static_cast<int64_t>(std::floor(exact));
    assigned += quota[i];
    remainders.emplace_back(exact - std::floor(exact), i);
  }
  std::stable_sort(remainders.begin(), remainders.end(),
                   [](const auto &a, const auto &b) { return a.first > b.first; });
  for (size_t r = 0; assigned < dev_total; ++r, ++assigned) {
    ++quota[remainders[r % remainders.size()].second];
  }

  std::mt19937_64 rng(seed);
  std::set<std::string> dev_ids;
  for (size_t i = 0; i < order.size(); ++i) {
    std::vector<std::string> ids = strata[order[i]];
    for (size_t k = ids.size(); k > 1; --k) {
      std::swap(ids[k - 1], ids[Bounded(rng, k)]);
    }
    for (int64_t k = 0; k < quota[i]; ++k) dev_ids.insert(ids[k]);
  }
  Split split;
  for (const DiagnosticComment &comment : corpus.comments()) {
    (dev_ids.contains(comment.id) ? split.dev : split.eval)
        .push_back(comment.id);
  }
  return split;
}

StatsReport CorpusStats(const Corpus &corpus, std::string_view tokenizer_id) {
  std::unique_ptr<Tokenizer> tokenizer = MakeTokenizer(tokenizer_id);
  StatsReport report;
  report.tokenizer = std::string(tokenizer->id());
  report.topics = static_cast<int64_t>(corpus.topics().size());
  for (const Counterargument &ca : corpus.counterarguments()) {
    ++report.counterarguments;
    if (ca.author_kind == AuthorKind::kExpert) {
      ++report.expert_counterarguments;
    } else {
      ++report.crowd_counterarguments;
    }
    report.sentences += static_cast<int64_t>(ca.sentences.size());
    report.tokens += static_cast<int64_t>(tokenizer->Tokenize(ca.text).size());
  }
  std::unordered_set<std::string> annotated;
  for (const DiagnosticComment &comment : corpus.comments()) {
    annotated.insert(comment.counterargument_id);
  }
  report.comments = static_cast<int64_t>(corpus.comments().size());
  report.annotated_counterarguments = static_cast<int64_t>(annotated.size());
  report.diagnoses = static_cast<int64_t>(corpus.diagnoses().size());
  report.judgments = static_cast<int64_t>(corpus.judgments().size());
  return report;
}

nlohmann::json ToJson(const StatsReport &report) {
  return {
      {"tokenizer", report.tokenizer},
      {"topics", report.topics},
      {"counterarguments", report.counterarguments},
      {"expert_counterarguments", report.expert_counterarguments},
      {"crowd_counterarguments", report.crowd_counterarguments},
      {"sentences", report.sentences},
      {"tokens", report.tokens},
      {"comments", report.comments},
      {"annotated_counterarguments", report.annotated_counterarguments},
      {"diagnoses", report.diagnoses},
      {"judgments", report.judgments},
      {"avg_tokens_per_argument", ToJson(report.AvgTokens())},
      {"avg_sentences_per_argument", ToJson(report.AvgSentences())},
      {"avg_comments_per_annotated_argument",
       ToJson(report.AvgCommentsPerAnnotated())},
  };
}

}  // namespace typic
