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

#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "typic/corpus.h"

namespace typic {
namespace {

using nlohmann::json;

constexpr char kManifestFile[] = "manifest.json";

[[noreturn]] void SchemaError(const std::string &message) {
  throw Error(ErrorCode::kSchemaError, message);
}

// Rejects keys outside `allowed` so that typos surface as schema errors.
void CheckKeys(const json &j, std::initializer_list<std::string_view> allowed,
               std::string_view record) {
  if (!j.is_object()) SchemaError(std::string(record) + " must be an object");
  for (const auto &[key, value] : j.items()) {
    bool known = false;
    for (std::string_view name : allowed) known = known || name == key;
    if (!known) {
      SchemaError(std::string(record) + " has unknown field '" + key + "'");
    }
  }
}

template <typename T>
T Field(const json &j, const char *name) {
  auto it = j.find(name);
  if (it == j.end()) SchemaError(std::string("missing field '") + name + "'");
  try {
    return it->get<T>();
  } catch (const json::exception &e) {
    SchemaError(std::string("field '") + name + "': " + e.what());
  }
}

json SpanToJson(const CharSpan &span) { return json::array({span.begin, span.end}); }

CharSpan SpanFromJson(const json &j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_unsigned() ||
      !j[1].is_number_unsigned()) {
    SchemaError("span must be [begin, end] with non-negative integers");
  }
  return {j[0].get<size_t>(), j[1].get<size_t>()};
}

Extractability ParseExtractability(const std::string &name) {
  for (Extractability value :
       {Extractability::kExtractable, Extractability::kExtractableWithChanges,
        Extractability::kNotExtractable}) {
    if (ExtractabilityName(value) == name) return value;
  }
  SchemaError("unknown extractability '" + name + "'");
}

void WriteText(const std::filesystem::path &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorCode::kIoError, "write failed: " + path.string());
}

template <typename Record>
std::string JsonLines(const std::vector<Record> &records) {
  std::string out;
  for (const Record &record : records) {
    out += ToJson(record).dump();
    out += '\n';
  }
  return out;
}

// Parses a JSON-lines file, reporting each bad line as an issue.
template <typename Record>
void ReadJsonLines(const std::filesystem::path &path,
                   const std::function<Record(const json &)> &decode,
                   std::vector<Record> *records, std::vector<Issue> *issues) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    issues->push_back({ErrorCode::kIoError, path.filename().string(),
                       "cannot open " + path.string()});
    return;
  }
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) continue;
    std::string where = path.filename().string() + ":" + std::to_string(number);
    try {
      records->push_back(decode(json::parse(line)));
    } catch (const json::exception &e) {
      issues->push_back({ErrorCode::kSchemaError, where, e.what()});
    } catch (const Error &e) {
      issues->push_back({e.code(), where, e.what()});
    }
  }
}

struct ParsedDir {
  CorpusData data;
  std::vector<Issue> issues;
};

ParsedDir ParseCorpusDir(const std::filesystem::path &dir) {
  ParsedDir parsed;
  CorpusData &data = parsed.data;
  try {
    data.manifest = ManifestFromJson(json::parse(ReadFile(dir / kManifestFile)));
  } catch (const json::exception &e) {
    parsed.issues.push_back({ErrorCode::kSchemaError, kManifestFile, e.what()});
    return parsed;
  } catch (const Error &e) {
    parsed.issues.push_back({e.code(), kManifestFile, e.what()});
    return parsed;
  }
  const auto &files = data.manifest.files;
  for (const char *required : {"topics", "counterarguments", "comments"}) {
    if (!files.contains(required)) {
      parsed.issues.push_back({ErrorCode::kSchemaError, kManifestFile,
                               std::string("files lacks '") + required + "'"});
    }
  }
  if (!parsed.issues.empty()) return parsed;

  auto path_of = [&](const char *key) { return dir / files.at(key); };
  ReadJsonLines<Topic>(path_of("topics"), TopicFromJson, &data.topics,
                       &parsed.issues);
  ReadJsonLines<Counterargument>(path_of("counterarguments"),
                                 CounterargumentFromJson,
                                 &data.counterarguments, &parsed.issues);
  ReadJsonLines<DiagnosticComment>(path_of("comments"), CommentFromJson,
                                   &data.comments, &parsed.issues);
  if (files.contains("templated")) {
    ReadJsonLines<TemplatedDiagnosis>(path_of("templated"), DiagnosisFromJson,
                                      &data.diagnoses, &parsed.issues);
  }
  if (files.contains("templated_overlap")) {
    ReadJsonLines<TemplatedDiagnosis>(path_of("templated_overlap"),
                                      DiagnosisFromJson,
                                      &data.overlap_diagnoses, &parsed.issues);
  }
  if (files.contains("judgments")) {
    ReadJsonLines<InformativenessJudgment>(path_of("judgments"),
                                           JudgmentFromJson, &data.judgments,
                                           &parsed.issues);
  }
  if (files.contains("split")) {
    try {
      data.split = SplitFromJson(json::parse(ReadFile(path_of("split"))));
    } catch (const json::exception &e) {
      parsed.issues.push_back({ErrorCode::kSchemaError, files.at("split"),
                               e.what()});
    } catch (const Error &e) {
      parsed.issues.push_back({e.code(), files.at("split"), e.what()});
    }
  }
  return parsed;
}

std::shared_ptr<const TemplateSet> ResolveTemplates(
    const std::filesystem::path &dir, const Manifest &manifest) {
  if (manifest.template_set.empty()) {
    SchemaError("manifest does not name a template set");
  }
  return std::make_shared<const TemplateSet>(
      LoadTemplateSetFile(dir / manifest.template_set));
}

}  // namespace

std::string ReadFile(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

json ToJson(const Topic &topic) {
  json points = json::array();
  for (const Point &p : topic.points) {
    points.push_back({{"id", p.id}, {"text", p.text}});
  }
  return {{"id", topic.id}, {"motion", topic.motion}, {"points", points}};
}

Topic TopicFromJson(const json &j) {
  CheckKeys(j, {"id", "motion", "points"}, "topic");
  Topic topic;
  topic.id = Field<std::string>(j, "id");
  topic.motion = Field<std::string>(j, "motion");
  for (const json &p : Field<json>(j, "points")) {
    CheckKeys(p, {"id", "text"}, "point");
    topic.points.push_back(
        {Field<std::string>(p, "id"), Field<std::string>(p, "text")});
  }
  return topic;
}

json ToJson(const Counterargument &ca) {
  json sentences = json::array();
  for (const CharSpan &span : ca.sentences) sentences.push_back(SpanToJson(span));
  return {{"id", ca.id},
          {"topic_id", ca.topic_id},
          {"text", ca.text},
          {"sentences", sentences},
          {"author_kind",
           ca.author_kind == AuthorKind::kExpert ? "expert" : "crowd"}};
}

Counterargument CounterargumentFromJson(const json &j) {
  CheckKeys(j, {"id", "topic_id", "text", "sentences", "author_kind"},
            "counterargument");
  Counterargument ca;
  ca.id = Field<std::string>(j, "id");
  ca.topic_id = Field<std::string>(j, "topic_id");
  ca.text = Field<std::string>(j, "text");
  for (const json &span : Field<json>(j, "sentences")) {
    ca.sentences.push_back(SpanFromJson(span));
  }
  std::string kind = Field<std::string>(j, "author_kind");
  if (kind == "expert") {
    ca.author_kind = AuthorKind::kExpert;
  } else if (kind == "crowd") {
    ca.author_kind = AuthorKind::kCrowd;
  } else {
    SchemaError("unknown author_kind '" + kind + "'");
  }
  return ca;
}

json ToJson(const DiagnosticComment &comment) {
  return {{"id", comment.id},
          {"counterargument_id", comment.counterargument_id},
          {"annotator_id", comment.annotator_id},
          {"target", comment.target},
          {"text", comment.text}};
}

DiagnosticComment CommentFromJson(const json &j) {
  CheckKeys(j, {"id", "counterargument_id", "annotator_id", "target", "text"},
            "comment");
  DiagnosticComment comment;
  comment.id = Field<std::string>(j, "id");
  comment.counterargument_id = Field<std::string>(j, "counterargument_id");
  comment.annotator_id = Field<std::string>(j, "annotator_id");
  comment.target = Field<std::vector<int>>(j, "target");
  comment.text = Field<std::string>(j, "text");
  return comment;
}

json ToJson(const Filler &filler) {
  json j = {{"text", filler.text}};
  if (filler.source) {
    j["source"] = {{"document", filler.source->document},
                   {"span", SpanToJson(filler.source->span)}};
  }
  if (filler.extractability) {
    j["extractability"] = ExtractabilityName(*filler.extractability);
  }
  return j;
}

Filler FillerFromJson(const json &j) {
  CheckKeys(j, {"text", "source", "extractability"}, "filler");
  Filler filler;
  filler.text = Field<std::string>(j, "text");
  if (j.contains("source")) {
    const json &source = j.at("source");
    CheckKeys(source, {"document", "span"}, "source");
    filler.source = SourceSpan{Field<std::string>(source, "document"),
                               SpanFromJson(Field<json>(source, "span"))};
  }
  if (j.contains("extractability")) {
    filler.extractability =
        ParseExtractability(Field<std::string>(j, "extractability"));
  }
  return filler;
}

json ToJson(const TemplatedDiagnosis &diagnosis) {
  json j = {{"id", diagnosis.id},
            {"comment_id", diagnosis.comment_id},
            {"annotator_id", diagnosis.annotator_id},
            {"label", diagnosis.label.name()}};
  if (!diagnosis.fillers.empty()) {
    json fillers = json::object();
    for (const auto &[slot, filler] : diagnosis.fillers) {
      fillers[slot] = ToJson(filler);
    }
    j["fillers"] = fillers;
  }
  return j;
}

TemplatedDiagnosis DiagnosisFromJson(const json &j) {
  CheckKeys(j, {"id", "comment_id", "annotator_id", "label", "fillers"},
            "templated diagnosis");
  TemplatedDiagnosis d;
  d.id = Field<std::string>(j, "id");
  d.comment_id = Field<std::string>(j, "comment_id");
  d.annotator_id = Field<std::string>(j, "annotator_id");
  d.label = Label::Parse(Field<std::string>(j, "label"));
  if (j.contains("fillers")) {
    const json &fillers = j.at("fillers");
    if (!fillers.is_object()) SchemaError("fillers must be an object");
    for (const auto &[slot, filler] : fillers.items()) {
      d.fillers.emplace(slot, FillerFromJson(filler));
    }
  }
  return d;
}

json ToJson(const InformativenessJudgment &judgment) {
  return {{"diagnosis_id", judgment.diagnosis_id},
          {"comment_id", judgment.comment_id},
          {"worker_id", judgment.worker_id},
          {"score", judgment.score}};
}

InformativenessJudgment JudgmentFromJson(const json &j) {
  CheckKeys(j, {"diagnosis_id", "comment_id", "worker_id", "score"},
            "judgment");
  return {Field<std::string>(j, "diagnosis_id"),
          Field<std::string>(j, "comment_id"),
          Field<std::string>(j, "worker_id"), Field<int>(j, "score")};
}

json ToJson(const Split &split) {
  return {{"dev", split.dev}, {"eval", split.eval}};
}

Split SplitFromJson(const json &j) {
  CheckKeys(j, {"dev", "eval"}, "split");
  return {Field<std::vector<std::string>>(j, "dev"),
          Field<std::vector<std::string>>(j, "eval")};
}

json ToJson(const Manifest &manifest) {
  return {{"name", manifest.name},
          {"template_set", manifest.template_set},
          {"template_set_version", manifest.template_set_version},
          {"tokenizer", manifest.tokenizer},
          {"files", manifest.files}};
}

Manifest ManifestFromJson(const json &j) {
  CheckKeys(j, {"name", "template_set", "template_set_version", "tokenizer",
                "files"},
            "manifest");
  Manifest manifest;
  manifest.name = Field<std::string>(j, "name");
  manifest.template_set = Field<std::string>(j, "template_set");
  manifest.template_set_version =
      Field<std::string>(j, "template_set_version");
  manifest.tokenizer = Field<std::string>(j, "tokenizer");
  manifest.files = Field<std::map<std::string, std::string>>(j, "files");
  return manifest;
}

std::map<std::string, std::string> DefaultCorpusFiles() {
  return {{"topics", "topics.jsonl"},
          {"counterarguments", "counterarguments.jsonl"},
          {"comments", "comments.jsonl"},
          {"templated", "templated.jsonl"},
          {"templated_overlap", "templated_overlap.jsonl"},
          {"judgments", "judgments.jsonl"}};
}

Corpus LoadCorpus(const std::filesystem::path &dir,
                  std::shared_ptr<const TemplateSet> templates) {
  ParsedDir parsed = ParseCorpusDir(dir);
  if (!parsed.issues.empty()) {
    const Issue &first = parsed.issues.front();
    throw Error(first.code, FormatIssue(first));
  }
  if (templates == nullptr) {
    templates = ResolveTemplates(dir, parsed.data.manifest);
  }
  return Corpus(std::move(parsed.data), std::move(templates));
}

std::vector<Issue> ValidateCorpusDir(const std::filesystem::path &dir) {
  ParsedDir parsed = ParseCorpusDir(dir);
  if (parsed.issues.empty() ||
      parsed.issues.front().where != kManifestFile) {
    try {
      auto templates = ResolveTemplates(dir, parsed.data.manifest);
      std::vector<Issue> more = ValidateCorpusData(parsed.data, *templates);
      parsed.issues.insert(parsed.issues.end(), more.begin(), more.end());
    } catch (const Error &e) {
      parsed.issues.push_back({e.code(), "template set", e.what()});
    }
  }
  return parsed.issues;
}

void WriteCorpus(const CorpusData &data, const std::filesystem::path &dir) {
  std::filesystem::create_directories(dir);
  Manifest manifest = data.manifest;
  for (const auto &[key, file] : DefaultCorpusFiles()) {
    manifest.files.try_emplace(key, file);
  }
  if (data.split) {
    manifest.files.try_emplace("split", "split.json");
  } else {
    manifest.files.erase("split");
  }
  WriteText(dir / kManifestFile, ToJson(manifest).dump(2) + "\n");
  WriteText(dir / manifest.files.at("topics"), JsonLines(data.topics));
  WriteText(dir / manifest.files.at("counterarguments"),
            JsonLines(data.counterarguments));
  WriteText(dir / manifest.files.at("comments"), JsonLines(data.comments));
  WriteText(dir / manifest.files.at("templated"), JsonLines(data.diagnoses));
  WriteText(dir / manifest.files.at("templated_overlap"),
            JsonLines(data.overlap_diagnoses));
  WriteText(dir / manifest.files.at("judgments"), JsonLines(data.judgments));
  if (data.split) {
    WriteText(dir / manifest.files.at("split"),
              ToJson(*data.split).dump(2) + "\n");
  }
}

}  // namespace typic
