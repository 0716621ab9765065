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

#include "typic/service.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <unordered_set>

#include "typic/error.h"

namespace typic {
namespace {

using nlohmann::json;

uint64_t Bounded(std::mt19937_64 &rng, uint64_t bound) {
  uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return draw % bound;
}

std::string RandomToken() {
  std::random_device device;
  static const char kHex[] = "0123456789abcdef";
  std::string out;
  for (int i = 0; i < 32; ++i) out += kHex[device() % 16];
  return out;
}

[[noreturn]] void Invalid(const std::string &message) {
  throw Error(ErrorCode::kValidationError, message);
}

void CheckKeys(const json &j, std::initializer_list<std::string_view> allowed,
               const std::string &what) {
  if (!j.is_object()) Invalid(what + " must be an object");
  for (const auto &[key, value] : j.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      Invalid(what + ": unexpected field '" + key + "'");
    }
  }
}

// Items of a payload given either as a single object or under `list_key`.
std::vector<json> PayloadList(const json &payload, const std::string &list_key) {
  if (!payload.is_object()) Invalid("payload must be an object");
  if (payload.contains(list_key)) {
    if (payload.size() != 1 || !payload[list_key].is_array()) {
      Invalid("payload '" + list_key + "' must be the only field, an array");
    }
    std::vector<json> out(payload[list_key].begin(), payload[list_key].end());
    if (out.empty()) Invalid("payload '" + list_key + "' is empty");
    return out;
  }
  return {payload};
}

std::string RecordId(const std::string &item, const std::string &annotator,
                     size_t n) {
  return item + "." + annotator + "." + std::to_string(n);
}

}  // namespace

std::string_view WorkflowName(Workflow workflow) {
  switch (workflow) {
    case Workflow::kFreeTextDiagnosis:
      return "FreeTextDiagnosis";
    case Workflow::kTemplateApplication:
      return "TemplateApplication";
    case Workflow::kInformativenessJudging:
      return "InformativenessJudging";
  }
  return "";
}

Workflow ParseWorkflow(std::string_view name) {
  for (Workflow w : {Workflow::kFreeTextDiagnosis,
                     Workflow::kTemplateApplication,
                     Workflow::kInformativenessJudging}) {
    if (WorkflowName(w) == name) return w;
  }
  throw Error(ErrorCode::kSchemaError,
              "unknown workflow '" + std::string(name) + "'");
}

std::string_view TaskStatusName(TaskStatus status) {
  switch (status) {
    case TaskStatus::kOpen:
      return "open";
    case TaskStatus::kInProgress:
      return "in_progress";
    case TaskStatus::kDone:
      return "done";
  }
  return "";
}

ProjectConfig ProjectConfigFromJson(const json &j) {
  auto fail = [](const std::string &message) {
    throw Error(ErrorCode::kSchemaError, "project config: " + message);
  };
  if (!j.is_object()) fail("must be an object");
  static const std::set<std::string> kKeys = {
      "id",   "corpus",           "workflow", "overlap_fraction", "annotators",
      "seed", "workers_per_item", "items",    "calibration"};
  for (const auto &[key, value] : j.items()) {
    if (!kKeys.count(key)) fail("unexpected field '" + key + "'");
  }
  ProjectConfig c;
  try {
    c.id = j.at("id").get<std::string>();
    c.corpus = j.at("corpus").get<std::string>();
    c.workflow = ParseWorkflow(j.at("workflow").get<std::string>());
    c.overlap_fraction = j.value("overlap_fraction", 0.0);
    c.seed = j.value("seed", uint64_t{0});
    c.workers_per_item = j.value("workers_per_item", 5);
    c.items = j.value("items", std::vector<std::string>{});
    c.calibration = j.value("calibration", std::vector<std::string>{});
    for (const json &a : j.at("annotators")) {
      AnnotatorConfig annotator;
      if (a.is_string()) {
        annotator.id = a.get<std::string>();
      } else {
        annotator.id = a.at("id").get<std::string>();
        annotator.token = a.value("token", std::string());
      }
      c.annotators.push_back(std::move(annotator));
    }
  } catch (const nlohmann::json::exception &e) {
    fail(e.what());
  }
  if (c.id.empty()) fail("empty id");
  for (char ch : c.id) {
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '-' &&
        ch != '_') {
      fail("id may only use letters, digits, '-' and '_'");
    }
  }
  if (!(c.overlap_fraction >= 0.0 && c.overlap_fraction <= 1.0)) {
    fail("overlap_fraction outside [0, 1]");
  }
  if (c.annotators.empty()) fail("no annotators");
  if (c.workers_per_item < 1) fail("workers_per_item < 1");
  std::set<std::string> ids, tokens;
  for (const AnnotatorConfig &a : c.annotators) {
    if (a.id.empty() || !ids.insert(a.id).second) {
      fail("empty or duplicate annotator id '" + a.id + "'");
    }
    if (!a.token.empty() && !tokens.insert(a.token).second) {
      fail("duplicate annotator token");
    }
  }
  return c;
}

json ToJson(const ProjectConfig &config, bool with_tokens) {
  json annotators = json::array();
  for (const AnnotatorConfig &a : config.annotators) {
    if (with_tokens) {
      annotators.push_back({{"id", a.id}, {"token", a.token}});
    } else {
      annotators.push_back(a.id);
    }
  }
  return {{"id", config.id},
          {"corpus", config.corpus},
          {"workflow", WorkflowName(config.workflow)},
          {"overlap_fraction", config.overlap_fraction},
          {"annotators", annotators},
          {"seed", config.seed},
          {"workers_per_item", config.workers_per_item},
          {"items", config.items},
          {"calibration", config.calibration}};
}

std::vector<TaskItem> PlanAssignments(const ProjectConfig &config,
                                      const std::vector<std::string> &items) {
  std::set<std::string> calibration(config.calibration.begin(),
                                    config.calibration.end());
  std::vector<std::string> annotators;
  for (const AnnotatorConfig &a : config.annotators) {
    annotators.push_back(a.id);
  }
  size_t a_count = annotators.size();
  std::vector<TaskItem> out;
  for (const std::string &item : config.calibration) {
    out.push_back({item, annotators, true});
  }
  std::vector<std::string> regular;
  for (const std::string &item : items) {
    if (!calibration.count(item)) regular.push_back(item);
  }
  size_t n = regular.size();

  if (config.workflow == Workflow::kInformativenessJudging) {
    size_t w = std::min(static_cast<size_t>(config.workers_per_item), a_count);
    for (size_t i = 0; i < n; ++i) {
      TaskItem task{regular[i], {}, false};
      for (size_t r = 0; r < w; ++r) {
        task.assignees.push_back(annotators[(i + r) % a_count]);
      }
      out.push_back(std::move(task));
    }
    return out;
  }

  size_t overlap = static_cast<size_t>(
      std::ceil(config.overlap_fraction * static_cast<double>(n) - 1e-9));
  overlap = std::min(overlap, n);
  if (overlap > 0 && a_count < 2) {
    throw Error(ErrorCode::kSchemaError,
                "project config: overlap needs two annotators");
  }
  std::vector<size_t> order(n);
  for (size_t i = 0; i < n; ++i) order[i] = i;
  std::mt19937_64 rng(config.seed);
  for (size_t i = n; i > 1; --i) {
    std::swap(order[i - 1], order[Bounded(rng, i)]);
  }
  std::vector<bool> doubled(n, false);
  for (size_t i = 0; i < overlap; ++i) doubled[order[i]] = true;
  size_t single_turn = 0, double_turn = 0;
  for (size_t i = 0; i < n; ++i) {
    TaskItem task{regular[i], {}, false};
    if (doubled[i]) {
      task.assignees.push_back(annotators[double_turn % a_count]);
      task.assignees.push_back(annotators[(double_turn + 1) % a_count]);
      ++double_turn;
    } else {
      task.assignees.push_back(annotators[single_turn % a_count]);
      ++single_turn;
    }
    out.push_back(std::move(task));
  }
  return out;
}

Project::Project(ProjectConfig config, std::shared_ptr<const Corpus> corpus)
    : config_(std::move(config)), corpus_(std::move(corpus)) {
  std::vector<std::string> universe;
  switch (config_.workflow) {
    case Workflow::kFreeTextDiagnosis:
      for (const Counterargument &ca : corpus_->counterarguments()) {
        universe.push_back(ca.id);
      }
      break;
    case Workflow::kTemplateApplication:
      for (const DiagnosticComment &c : corpus_->comments()) {
        universe.push_back(c.id);
      }
      break;
    case Workflow::kInformativenessJudging:
      for (const TemplatedDiagnosis &d : corpus_->diagnoses()) {
        if (!d.label.is_not_applicable()) universe.push_back(d.id);
      }
      break;
  }
  std::unordered_set<std::string> known(universe.begin(), universe.end());
  std::vector<std::string> items = config_.items.empty() ? universe
                                                         : config_.items;
  std::unordered_set<std::string> seen;
  for (const std::string &item : items) {
    if (!known.count(item)) {
      throw Error(ErrorCode::kSchemaError,
                  "project config: unknown item '" + item + "'");
    }
    if (!seen.insert(item).second) {
      throw Error(ErrorCode::kSchemaError,
                  "project config: duplicate item '" + item + "'");
    }
  }
  for (const std::string &item : config_.calibration) {
    if (!known.count(item)) {
      throw Error(ErrorCode::kSchemaError,
                  "project config: unknown calibration item '" + item + "'");
    }
  }
  items_ = PlanAssignments(config_, items);
  for (const TaskItem &item : items_) {
    for (size_t r = 0; r < item.assignees.size(); ++r) {
      if (assignment_index_.count({item.assignees[r], item.id})) continue;
      assignment_index_[{item.assignees[r], item.id}] = assignments_.size();
      assignments_.push_back({item.id, item.assignees[r], static_cast<int>(r),
                              item.calibration, TaskStatus::kOpen, 0});
    }
  }
}

std::optional<std::string> Project::AnnotatorForToken(
    std::string_view token) const {
  if (token.empty()) return std::nullopt;
  for (const AnnotatorConfig &a : config_.annotators) {
    if (a.token == token) return a.id;
  }
  return std::nullopt;
}

Assignment &Project::FindAssignment(const std::string &annotator,
                                    const std::string &item) {
  auto it = assignment_index_.find({annotator, item});
  if (it == assignment_index_.end()) {
    throw Error(ErrorCode::kUnknownItem,
                "item '" + item + "' is not assigned to " + annotator);
  }
  return assignments_[it->second];
}

const Assignment *Project::FindAssignmentOrNull(
    const std::string &annotator, const std::string &item) const {
  auto it = assignment_index_.find({annotator, item});
  return it == assignment_index_.end() ? nullptr : &assignments_[it->second];
}

std::optional<Assignment> Project::NextTask(const std::string &annotator) {
  bool registered = std::any_of(
      config_.annotators.begin(), config_.annotators.end(),
      [&](const AnnotatorConfig &a) { return a.id == annotator; });
  if (!registered) {
    throw Error(ErrorCode::kUnknownAnnotator,
                "unknown annotator '" + annotator + "'");
  }
  for (bool calibration : {true, false}) {
    for (Assignment &a : assignments_) {
      if (a.annotator_id == annotator && a.calibration == calibration &&
          a.status == TaskStatus::kOpen) {
        a.status = TaskStatus::kInProgress;
        return a;
      }
    }
  }
  return std::nullopt;
}

void Project::ApplyIssue(const std::string &annotator,
                         const std::string &item) {
  Assignment &a = FindAssignment(annotator, item);
  if (a.status == TaskStatus::kOpen) a.status = TaskStatus::kInProgress;
}

void Project::ApplySubmit(const Submission &submission) {
  Assignment &a = FindAssignment(submission.annotator_id, submission.item_id);
  a.status = TaskStatus::kDone;
  a.revision = submission.revision;
  history_.push_back(submission);
}

std::vector<json> Project::ValidatePayload(const std::string &annotator,
                                           const std::string &item,
                                           const json &payload) const {
  const Corpus &corpus = *corpus_;
  CorpusData data;
  data.manifest.template_set_version = corpus.templates().version();
  std::vector<json> records;
  try {
    switch (config_.workflow) {
      case Workflow::kFreeTextDiagnosis: {
        const Counterargument &ca = *corpus.FindCounterargument(item);
        data.topics.push_back(*corpus.FindTopic(ca.topic_id));
        data.counterarguments.push_back(ca);
        for (const json &entry : PayloadList(payload, "comments")) {
          CheckKeys(entry, {"target", "text"}, "comment");
          json record = {{"annotator_id", annotator},
                         {"counterargument_id", item},
                         {"id", RecordId(item, annotator, records.size() + 1)},
                         {"target", entry.value("target", json::array())},
                         {"text", entry.value("text", std::string())}};
          data.comments.push_back(CommentFromJson(record));
          records.push_back(std::move(record));
        }
        break;
      }
      case Workflow::kTemplateApplication: {
        const DiagnosticComment &comment = *corpus.FindComment(item);
        data.topics.push_back(corpus.TopicOfComment(comment));
        data.counterarguments.push_back(
            *corpus.FindCounterargument(comment.counterargument_id));
        data.comments.push_back(comment);
        for (const json &entry : PayloadList(payload, "diagnoses")) {
          CheckKeys(entry, {"label", "fillers"}, "diagnosis");
          json record = {{"annotator_id", annotator},
                         {"comment_id", item},
                         {"id", RecordId(item, annotator, records.size() + 1)},
                         {"label", entry.value("label", std::string())}};
          if (entry.contains("fillers") && !entry["fillers"].empty()) {
            record["fillers"] = entry["fillers"];
          }
          data.diagnoses.push_back(DiagnosisFromJson(record));
          records.push_back(std::move(record));
        }
        break;
      }
      case Workflow::kInformativenessJudging: {
        CheckKeys(payload, {"score"}, "judgment");
        if (!payload.contains("score")) Invalid("judgment: missing score");
        const TemplatedDiagnosis &d = *corpus.FindDiagnosis(item);
        const DiagnosticComment &comment = *corpus.FindComment(d.comment_id);
        data.topics.push_back(corpus.TopicOfComment(comment));
        data.counterarguments.push_back(
            *corpus.FindCounterargument(comment.counterargument_id));
        data.comments.push_back(comment);
        data.diagnoses.push_back(d);
        json record = {{"comment_id", d.comment_id},
                       {"diagnosis_id", item},
                       {"score", payload["score"]},
                       {"worker_id", annotator}};
        data.judgments.push_back(JudgmentFromJson(record));
        records.push_back(std::move(record));
        break;
      }
    }
  } catch (const Error &e) {
    if (e.code() == ErrorCode::kValidationError) throw;
    Invalid(e.what());
  } catch (const json::exception &e) {
    Invalid(e.what());
  }
  std::vector<Issue> issues = ValidateCorpusData(data, corpus.templates());
  if (!issues.empty()) Invalid(FormatIssue(issues.front()));
  return records;
}

int64_t Project::Submit(const std::string &annotator, const std::string &item,
                        const json &payload, int64_t revision) {
  const Assignment *a = FindAssignmentOrNull(annotator, item);
  if (a == nullptr) {
    throw Error(ErrorCode::kUnknownItem,
                "item '" + item + "' is not assigned to " + annotator);
  }
  if (revision != a->revision) {
    throw Error(ErrorCode::kRevisionConflict,
                "item '" + item + "' is at revision " +
                    std::to_string(a->revision) + ", got " +
                    std::to_string(revision));
  }
  Submission submission{item, annotator, revision + 1,
                        ValidatePayload(annotator, item, payload)};
  ApplySubmit(submission);
  return submission.revision;
}

json Project::TaskPayload(const Assignment &assignment) const {
  const Corpus &corpus = *corpus_;
  json context;
  const DiagnosticComment *comment = nullptr;
  const TemplatedDiagnosis *diagnosis = nullptr;
  const Counterargument *ca = nullptr;
  switch (config_.workflow) {
    case Workflow::kFreeTextDiagnosis:
      ca = corpus.FindCounterargument(assignment.item_id);
      break;
    case Workflow::kTemplateApplication:
      comment = corpus.FindComment(assignment.item_id);
      break;
    case Workflow::kInformativenessJudging:
      diagnosis = corpus.FindDiagnosis(assignment.item_id);
      comment = corpus.FindComment(diagnosis->comment_id);
      break;
  }
  if (comment != nullptr) {
    ca = corpus.FindCounterargument(comment->counterargument_id);
    context["comment"] = ToJson(*comment);
  }
  context["topic"] = ToJson(*corpus.FindTopic(ca->topic_id));
  context["counterargument"] = ToJson(*ca);
  context["template_set_version"] = corpus.templates().version();
  if (diagnosis != nullptr) {
    json rendered = json::object();
    const Template &tmpl = corpus.templates().Get(diagnosis->label.name());
    FillerMap fillers;
    for (const auto &[slot, filler] : diagnosis->fillers) {
      fillers[slot] = filler.text;
    }
    for (const auto &[locale, pattern] : tmpl.surface_forms) {
      rendered[locale] = Render(tmpl, locale, fillers);
    }
    context["diagnosis"] = {{"label", diagnosis->label.name()},
                            {"rendered", rendered}};
    context["rubric"] = {
        {"3", "Conveys the point of the original comment at the same level "
              "of detail."},
        {"2", "Conveys the point of the original comment with less detail."},
        {"1", "Does not convey the point of the original comment."}};
  }
  return {{"project", config_.id},
          {"workflow", WorkflowName(config_.workflow)},
          {"item_id", assignment.item_id},
          {"revision", assignment.revision},
          {"status", TaskStatusName(assignment.status)},
          {"calibration", assignment.calibration},
          {"context", context}};
}

CorpusData Project::ExportData() const {
  const Corpus &corpus = *corpus_;
  CorpusData data;
  data.manifest.name = config_.id;
  data.manifest.template_set = "templates.json";
  data.manifest.template_set_version = corpus.templates().version();
  data.manifest.tokenizer = corpus.manifest().tokenizer;
  data.manifest.files = DefaultCorpusFiles();
  data.topics = corpus.topics();
  data.counterarguments = corpus.counterarguments();

  // Latest submission per regular assignment, in assignment order.
  std::map<std::pair<std::string, std::string>, const Submission *> latest;
  for (const Submission &s : history_) {
    latest[{s.annotator_id, s.item_id}] = &s;
  }
  std::vector<std::pair<const Assignment *, const Submission *>> done;
  for (const Assignment &a : assignments_) {
    if (a.calibration) continue;
    auto it = latest.find({a.annotator_id, a.item_id});
    if (it != latest.end()) done.emplace_back(&a, it->second);
  }

  switch (config_.workflow) {
    case Workflow::kFreeTextDiagnosis:
      for (const auto &[a, s] : done) {
        for (const json &r : s->records) {
          data.comments.push_back(CommentFromJson(r));
        }
      }
      break;
    case Workflow::kTemplateApplication:
      data.comments = corpus.comments();
      data.split = corpus.split();
      for (const auto &[a, s] : done) {
        auto &layer = a->rank == 0 ? data.diagnoses : data.overlap_diagnoses;
        for (const json &r : s->records) layer.push_back(DiagnosisFromJson(r));
      }
      break;
    case Workflow::kInformativenessJudging:
      data.comments = corpus.comments();
      data.split = corpus.split();
      data.diagnoses = corpus.diagnoses();
      data.overlap_diagnoses = corpus.overlap_diagnoses();
      for (const auto &[a, s] : done) {
        for (const json &r : s->records) {
          data.judgments.push_back(JudgmentFromJson(r));
        }
      }
      break;
  }
  return data;
}

std::vector<json> Project::CalibrationRecords() const {
  std::map<std::pair<std::string, std::string>, const Submission *> latest;
  for (const Submission &s : history_) {
    latest[{s.annotator_id, s.item_id}] = &s;
  }
  std::vector<json> out;
  for (const Assignment &a : assignments_) {
    if (!a.calibration) continue;
    auto it = latest.find({a.annotator_id, a.item_id});
    if (it == latest.end()) continue;
    for (const json &r : it->second->records) {
      out.push_back({{"annotator_id", a.annotator_id},
                     {"item", a.item_id},
                     {"record", r}});
    }
  }
  return out;
}

json Project::Summary() const {
  json status = {{"open", 0}, {"in_progress", 0}, {"done", 0}};
  for (const Assignment &a : assignments_) {
    status[std::string(TaskStatusName(a.status))] =
        status[std::string(TaskStatusName(a.status))].get<int64_t>() + 1;
  }
  int64_t overlap = 0, calibration = 0;
  for (const TaskItem &item : items_) {
    if (item.calibration) {
      ++calibration;
    } else if (item.assignees.size() >= 2) {
      ++overlap;
    }
  }
  json out = ToJson(config_, false);
  out["item_count"] = static_cast<int64_t>(items_.size()) - calibration;
  out["overlap_items"] = overlap;
  out["calibration_items"] = calibration;
  out["assignments"] = status;
  out["submissions"] = static_cast<int64_t>(history_.size());
  return out;
}

json PayloadSchemas() {
  json target = {{"type", "array"},
                 {"items", {{"type", "integer"}, {"minimum", 0}}},
                 {"minItems", 1}};
  json comment = {{"type", "object"},
                  {"required", {"target", "text"}},
                  {"additionalProperties", false},
                  {"properties",
                   {{"target", target},
                    {"text", {{"type", "string"}, {"minLength", 1}}}}}};
  json span = {{"type", "array"},
               {"items", {{"type", "integer"}, {"minimum", 0}}},
               {"minItems", 2},
               {"maxItems", 2}};
  json filler = {
      {"type", "object"},
      {"required", {"text"}},
      {"additionalProperties", false},
      {"properties",
       {{"text", {{"type", "string"}, {"minLength", 1}}},
        {"extractability",
         {{"enum",
           {"Extractable", "ExtractableWithChanges", "NotExtractable"}}}},
        {"source",
         {{"type", "object"},
          {"required", {"document", "span"}},
          {"additionalProperties", false},
          {"properties",
           {{"document",
             {{"type", "string"},
              {"pattern", "^(counterargument|original:.+)$"}}},
            {"span", span}}}}}}}};
  json diagnosis = {
      {"type", "object"},
      {"required", {"label"}},
      {"additionalProperties", false},
      {"properties",
       {{"label", {{"type", "string"}}},
        {"fillers",
         {{"type", "object"}, {"additionalProperties", filler}}}}}};
  json judgment = {
      {"type", "object"},
      {"required", {"score"}},
      {"additionalProperties", false},
      {"properties", {{"score", {{"type", "integer"}, {"enum", {1, 2, 3}}}}}}};
  auto one_or_many = [](const json &schema, const std::string &key) {
    return json{{"oneOf",
                 {schema,
                  {{"type", "object"},
                   {"required", {key}},
                   {"additionalProperties", false},
                   {"properties",
                    {{key,
                      {{"type", "array"},
                       {"items", schema},
                       {"minItems", 1}}}}}}}}};
  };
  return {{"version", "1"},
          {"FreeTextDiagnosis", one_or_many(comment, "comments")},
          {"TemplateApplication", one_or_many(diagnosis, "diagnoses")},
          {"InformativenessJudging", judgment}};
}

AnnotationService::AnnotationService(std::filesystem::path log_path)
    : log_(std::move(log_path)) {
  for (const json &event : log_.ReadAll()) {
    const std::string type = event.at("event").get<std::string>();
    if (type == "create") {
      CreateFromConfig(ProjectConfigFromJson(event.at("config")));
    } else if (type == "delete") {
      projects_.erase(event.at("project").get<std::string>());
    } else if (type == "issue") {
      Get(event.at("project").get<std::string>())
          .ApplyIssue(event.at("annotator").get<std::string>(),
                      event.at("item").get<std::string>());
    } else if (type == "submit") {
      Submission s{event.at("item").get<std::string>(),
                   event.at("annotator").get<std::string>(),
                   event.at("revision").get<int64_t>(),
                   event.at("records").get<std::vector<json>>()};
      Get(event.at("project").get<std::string>()).ApplySubmit(s);
    } else {
      throw Error(ErrorCode::kSchemaError, "unknown log event " + type);
    }
  }
}

void AnnotationService::CreateFromConfig(const ProjectConfig &config) {
  std::string key = std::filesystem::weakly_canonical(config.corpus).string();
  auto it = corpora_.find(key);
  if (it == corpora_.end()) {
    it = corpora_
             .emplace(key, std::make_shared<const Corpus>(
                               LoadCorpus(config.corpus)))
             .first;
  }
  projects_[config.id] = std::make_unique<Project>(config, it->second);
}

Project &AnnotationService::Get(const std::string &id) {
  auto it = projects_.find(id);
  if (it == projects_.end()) {
    throw Error(ErrorCode::kUnknownProject, "unknown project '" + id + "'");
  }
  return *it->second;
}

const Project &AnnotationService::Get(const std::string &id) const {
  auto it = projects_.find(id);
  if (it == projects_.end()) {
    throw Error(ErrorCode::kUnknownProject, "unknown project '" + id + "'");
  }
  return *it->second;
}

json AnnotationService::CreateProject(const json &config_json) {
  ProjectConfig config = ProjectConfigFromJson(config_json);
  config.corpus = std::filesystem::absolute(config.corpus).lexically_normal();
  for (AnnotatorConfig &a : config.annotators) {
    if (a.token.empty()) a.token = RandomToken();
  }
  std::lock_guard<std::mutex> lock(mu_);
  if (projects_.count(config.id)) {
    throw Error(ErrorCode::kSchemaError,
                "project '" + config.id + "' already exists");
  }
  try {
    CreateFromConfig(config);
  } catch (const Error &e) {
    if (e.code() == ErrorCode::kSchemaError) throw;
    throw Error(ErrorCode::kSchemaError,
                std::string("project corpus: ") + e.what());
  }
  log_.Append({{"event", "create"}, {"config", ToJson(config, true)}});
  json tokens = json::object();
  for (const AnnotatorConfig &a : config.annotators) tokens[a.id] = a.token;
  return {{"project", projects_.at(config.id)->Summary()}, {"tokens", tokens}};
}

json AnnotationService::GetProject(const std::string &id) const {
  std::lock_guard<std::mutex> lock(mu_);
  return Get(id).Summary();
}

json AnnotationService::ListProjects() const {
  std::lock_guard<std::mutex> lock(mu_);
  json out = json::array();
  for (const auto &[id, project] : projects_) out.push_back(project->Summary());
  return out;
}

void AnnotationService::DeleteProject(const std::string &id) {
  std::lock_guard<std::mutex> lock(mu_);
  Get(id);
  log_.Append({{"event", "delete"}, {"project", id}});
  projects_.erase(id);
}

std::string AnnotationService::Authenticate(const std::string &project,
                                            std::string_view token) const {
  std::lock_guard<std::mutex> lock(mu_);
  std::optional<std::string> annotator = Get(project).AnnotatorForToken(token);
  if (!annotator) {
    throw Error(ErrorCode::kUnauthorized, "invalid annotator token");
  }
  return *annotator;
}

json AnnotationService::NextTask(const std::string &project,
                                 const std::string &annotator) {
  std::lock_guard<std::mutex> lock(mu_);
  Project &p = Get(project);
  std::optional<Assignment> next = p.NextTask(annotator);
  if (!next) return nullptr;
  log_.Append({{"event", "issue"},
               {"project", project},
               {"annotator", annotator},
               {"item", next->item_id}});
  return p.TaskPayload(*next);
}

json AnnotationService::Submit(const std::string &project,
                               const std::string &annotator,
                               const std::string &item, const json &payload,
                               int64_t revision) {
  std::lock_guard<std::mutex> lock(mu_);
  Project &p = Get(project);
  int64_t next = p.Submit(annotator, item, payload, revision);
  const Submission &s = p.history().back();
  log_.Append({{"event", "submit"},
               {"project", project},
               {"annotator", annotator},
               {"item", item},
               {"revision", next},
               {"records", s.records}});
  return {{"item_id", item}, {"revision", next}, {"status", "done"}};
}

CorpusData AnnotationService::ExportData(const std::string &project) const {
  std::lock_guard<std::mutex> lock(mu_);
  return Get(project).ExportData();
}

void AnnotationService::Export(const std::string &project,
                               const std::filesystem::path &dir) const {
  CorpusData data;
  json templates;
  std::vector<json> calibration;
  {
    std::lock_guard<std::mutex> lock(mu_);
    const Project &p = Get(project);
    data = p.ExportData();
    templates = TemplateSetToJson(p.corpus().templates());
    calibration = p.CalibrationRecords();
  }
  WriteCorpus(data, dir);
  std::ofstream t(dir / "templates.json", std::ios::binary);
  t << templates.dump(2) << "\n";
  std::ofstream c(dir / "calibration.jsonl", std::ios::binary);
  for (const json &r : calibration) c << r.dump() << "\n";
  if (!t || !c) {
    throw Error(ErrorCode::kIoError, "cannot write export to " + dir.string());
  }
}

std::map<std::string, std::string> AnnotationService::ExportFiles(
    const std::string &project) const {
  std::random_device device;
  std::filesystem::path dir =
      std::filesystem::temp_directory_path() /
      ("typic-export-" + std::to_string(device()) + std::to_string(device()));
  std::map<std::string, std::string> out;
  try {
    Export(project, dir);
    for (const auto &entry : std::filesystem::directory_iterator(dir)) {
      out[entry.path().filename().string()] = ReadFile(entry.path());
    }
  } catch (...) {
    std::filesystem::remove_all(dir);
    throw;
  }
  std::filesystem::remove_all(dir);
  return out;
}

json AnnotationService::Templates(const std::string &project) const {
  std::lock_guard<std::mutex> lock(mu_);
  return TemplateSetToJson(Get(project).corpus().templates());
}

}  // namespace typic
