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

#ifndef TYPIC_CORPUS_H_
#define TYPIC_CORPUS_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "json.hpp"
#include "typic/error.h"
#include "typic/fraction.h"
#include "typic/template.h"

namespace typic {

struct Point {
  std::string id;
  std::string text;

  bool operator==(const Point &other) const = default;
};

// A debate motion together with the points of its opening (government)
// speech.
struct Topic {
  std::string id;
  std::string motion;
  std::vector<Point> points;

  bool operator==(const Topic &other) const = default;
};

// Half-open code point range.
struct CharSpan {
  size_t begin = 0;
  size_t end = 0;

  size_t length() const { return end - begin; }
  auto operator<=>(const CharSpan &other) const = default;
};

enum class AuthorKind { kExpert, kCrowd };

struct Counterargument {
  std::string id;
  std::string topic_id;
  std::string text;
  std::vector<CharSpan> sentences;
  AuthorKind author_kind = AuthorKind::kCrowd;

  bool operator==(const Counterargument &other) const = default;
};

// Free-text diagnosis of target sentences of one counterargument.
struct DiagnosticComment {
  std::string id;
  std::string counterargument_id;
  std::string annotator_id;
  std::vector<int> target;  // sorted sentence indices
  std::string text;

  bool operator==(const DiagnosticComment &other) const = default;
};

enum class Extractability {
  kExtractable,
  kExtractableWithChanges,
  kNotExtractable,
};

std::string_view ExtractabilityName(Extractability value);

inline constexpr std::string_view kCounterargumentDocument = "counterargument";

// Where a filler was taken from. `document` is "counterargument" or
// "original:<point id>" for a point of the topic's opening speech.
struct SourceSpan {
  std::string document;
  CharSpan span;

  bool operator==(const SourceSpan &other) const = default;
};

// A slot filler. The source span is present exactly when the filler is
// marked Extractable. Extractability is only recorded for fillers that went
// through the extractability analysis.
struct Filler {
  std::string text;
  std::optional<SourceSpan> source;
  std::optional<Extractability> extractability;

  bool operator==(const Filler &other) const = default;
};

// A comment rendered as (template | NotApplicable) plus fillers. A comment
// that raises several points may yield more than one diagnosis.
struct TemplatedDiagnosis {
  std::string id;
  std::string comment_id;
  std::string annotator_id;
  Label label = Label::NotApplicable();
  std::map<SlotName, Filler> fillers;  // empty for NotApplicable

  bool operator==(const TemplatedDiagnosis &other) const = default;
};

// One worker's 1-3 informativeness score for a templated diagnosis.
struct InformativenessJudgment {
  std::string diagnosis_id;
  std::string comment_id;
  std::string worker_id;
  int score = 0;

  bool operator==(const InformativenessJudgment &other) const = default;
};

struct Split {
  std::vector<std::string> dev;
  std::vector<std::string> eval;

  bool operator==(const Split &other) const = default;
};

// Contents of manifest.json. File paths are relative to the corpus
// directory.
struct Manifest {
  std::string name;
  std::string template_set;  // path of the template-set document
  std::string template_set_version;
  std::string tokenizer = "unicode-word";
  std::map<std::string, std::string> files;

  bool operator==(const Manifest &other) const = default;
};

// Raw records of a corpus before validation.
struct CorpusData {
  Manifest manifest;
  std::vector<Topic> topics;
  std::vector<Counterargument> counterarguments;
  std::vector<DiagnosticComment> comments;
  // Main template-application layer.
  std::vector<TemplatedDiagnosis> diagnoses;
  // Second annotations of the double-annotated subset.
  std::vector<TemplatedDiagnosis> overlap_diagnoses;
  std::vector<InformativenessJudgment> judgments;
  std::optional<Split> split;

  bool operator==(const CorpusData &other) const = default;
};

// A validation finding; `where` is "file:line" or a record id.
struct Issue {
  ErrorCode code;
  std::string where;
  std::string message;
};

std::string FormatIssue(const Issue &issue);

// Checks every type invariant and cross reference.
std::vector<Issue> ValidateCorpusData(const CorpusData &data,
                                      const TemplateSet &templates);

// A validated, immutable corpus. Safe to share across threads.
class Corpus {
 public:
  // Throws the first validation issue as an Error.
  Corpus(CorpusData data, std::shared_ptr<const TemplateSet> templates);

  const CorpusData &data() const { return data_; }
  const Manifest &manifest() const { return data_.manifest; }
  const TemplateSet &templates() const { return *templates_; }
  std::shared_ptr<const TemplateSet> shared_templates() const {
    return templates_;
  }

  const std::vector<Topic> &topics() const { return data_.topics; }
  const std::vector<Counterargument> &counterarguments() const {
    return data_.counterarguments;
  }
  const std::vector<DiagnosticComment> &comments() const {
    return data_.comments;
  }
  const std::vector<TemplatedDiagnosis> &diagnoses() const {
    return data_.diagnoses;
  }
  const std::vector<TemplatedDiagnosis> &overlap_diagnoses() const {
    return data_.overlap_diagnoses;
  }
  const std::vector<InformativenessJudgment> &judgments() const {
    return data_.judgments;
  }
  const std::optional<Split> &split() const { return data_.split; }

  // Lookups return nullptr when the id is unknown.
  const Topic *FindTopic(std::string_view id) const;
  const Counterargument *FindCounterargument(std::string_view id) const;
  const DiagnosticComment *FindComment(std::string_view id) const;
  const TemplatedDiagnosis *FindDiagnosis(std::string_view id) const;

  // Topic of the counterargument a comment belongs to.
  const Topic &TopicOfComment(const DiagnosticComment &comment) const;

  // Text of a sentence; throws Error(kSpanError) for a bad index.
  std::string_view SentenceText(const Counterargument &ca, int index) const;

 private:
  CorpusData data_;
  std::shared_ptr<const TemplateSet> templates_;
  std::unordered_map<std::string, size_t> topic_index_;
  std::unordered_map<std::string, size_t> ca_index_;
  std::unordered_map<std::string, size_t> comment_index_;
  // id -> (is overlap layer, index)
  std::unordered_map<std::string, std::pair<bool, size_t>> diagnosis_index_;
};

// Splits comment ids into dev/eval. |dev| = round(ratio * N), allocated to
// topics proportionally (largest remainder) and drawn by a seeded
// Fisher-Yates shuffle, so the result is identical on every platform.
// Errors: kEmptyCorpus, kInvalidArgument (ratio outside (0, 1)).
Split SplitComments(const Corpus &corpus, double ratio, uint64_t seed);

struct StatsReport {
  std::string tokenizer;
  int64_t topics = 0;
  int64_t counterarguments = 0;
  int64_t expert_counterarguments = 0;
  int64_t crowd_counterarguments = 0;
  int64_t sentences = 0;
  int64_t tokens = 0;
  int64_t comments = 0;
  int64_t annotated_counterarguments = 0;
  int64_t diagnoses = 0;
  int64_t judgments = 0;

  Fraction AvgTokens() const { return {tokens, counterarguments}; }
  Fraction AvgSentences() const { return {sentences, counterarguments}; }
  Fraction AvgCommentsPerAnnotated() const {
    return {comments, annotated_counterarguments};
  }
};

// Throws Error(kUnknownTokenizer).
StatsReport CorpusStats(const Corpus &corpus, std::string_view tokenizer_id);

nlohmann::json ToJson(const StatsReport &report);

// --- Files ---------------------------------------------------------------
//
// A corpus directory holds manifest.json plus one JSON-lines file per record
// type (topics, counterarguments, comments, templated, templated_overlap,
// judgments) and an optional split.json. Records are written with sorted
// keys and no insignificant whitespace, so load -> write reproduces
// committed files byte for byte.

// Reads and validates a corpus directory. `templates` overrides the template
// set named by the manifest. Errors: kSchemaError, kDanglingReference,
// kSpanError, kInvariantViolation, kIoError.
Corpus LoadCorpus(const std::filesystem::path &dir,
                  std::shared_ptr<const TemplateSet> templates = nullptr);

// Parses and validates, collecting every issue instead of stopping at the
// first one.
std::vector<Issue> ValidateCorpusDir(const std::filesystem::path &dir);

// Writes the canonical form of `data` into `dir` (created if needed). The
// manifest's file map decides file names; missing entries get defaults.
void WriteCorpus(const CorpusData &data, const std::filesystem::path &dir);

// Default manifest file map.
std::map<std::string, std::string> DefaultCorpusFiles();

// Record codecs, shared with the annotation service. The From* functions
// throw Error(kSchemaError).
nlohmann::json ToJson(const Topic &topic);
nlohmann::json ToJson(const Counterargument &ca);
nlohmann::json ToJson(const DiagnosticComment &comment);
nlohmann::json ToJson(const Filler &filler);
nlohmann::json ToJson(const TemplatedDiagnosis &diagnosis);
nlohmann::json ToJson(const InformativenessJudgment &judgment);
nlohmann::json ToJson(const Split &split);
nlohmann::json ToJson(const Manifest &manifest);

Topic TopicFromJson(const nlohmann::json &j);
Counterargument CounterargumentFromJson(const nlohmann::json &j);
DiagnosticComment CommentFromJson(const nlohmann::json &j);
Filler FillerFromJson(const nlohmann::json &j);
TemplatedDiagnosis DiagnosisFromJson(const nlohmann::json &j);
InformativenessJudgment JudgmentFromJson(const nlohmann::json &j);
Split SplitFromJson(const nlohmann::json &j);
Manifest ManifestFromJson(const nlohmann::json &j);

// Reads a whole file; throws Error(kIoError).
std::string ReadFile(const std::filesystem::path &path);

}  // namespace typic

#endif  // TYPIC_CORPUS_H_
