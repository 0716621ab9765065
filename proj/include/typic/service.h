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

#ifndef TYPIC_SERVICE_H_
#define TYPIC_SERVICE_H_

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "typic/corpus.h"

namespace typic {

enum class Workflow {
  kFreeTextDiagnosis,
  kTemplateApplication,
  kInformativenessJudging,
};

std::string_view WorkflowName(Workflow workflow);
Workflow ParseWorkflow(std::string_view name);

struct AnnotatorConfig {
  std::string id;
  std::string token;
};

struct ProjectConfig {
  std::string id;
  std::string corpus;  // corpus directory
  Workflow workflow = Workflow::kTemplateApplication;
  double overlap_fraction = 0.0;
  std::vector<AnnotatorConfig> annotators;
  uint64_t seed = 0;
  // Assignees per item for informativeness judging.
  int workers_per_item = 5;
  // Restricts the project to these items; all items when empty.
  std::vector<std::string> items;
  // Items every annotator does first. Their submissions are exported
  // separately and kept out of the annotation layers.
  std::vector<std::string> calibration;
};

// Parses and checks a config document; throws Error(kSchemaError).
ProjectConfig ProjectConfigFromJson(const nlohmann::json &j);
nlohmann::json ToJson(const ProjectConfig &config, bool with_tokens);

enum class TaskStatus { kOpen, kInProgress, kDone };
std::string_view TaskStatusName(TaskStatus status);

struct Assignment {
  std::string item_id;
  std::string annotator_id;
  // 0 for the first assignee, 1 for the second one of an overlap item.
  int rank = 0;
  bool calibration = false;
  TaskStatus status = TaskStatus::kOpen;
  int64_t revision = 0;
};

// One accepted submission. Records are corpus-format JSON objects.
struct Submission {
  std::string item_id;
  std::string annotator_id;
  int64_t revision = 0;  // revision after the submission
  std::vector<nlohmann::json> records;
};

struct TaskItem {
  std::string id;
  std::vector<std::string> assignees;
  bool calibration = false;
};

// Items and assignees for a project. Overlap items are the first
// ceil(overlap_fraction * N) items of a seeded shuffle.
std::vector<TaskItem> PlanAssignments(const ProjectConfig &config,
                                      const std::vector<std::string> &items);

// Append-only JSON Lines event log. An empty path keeps events in memory.
class EventLog {
 public:
  explicit EventLog(std::filesystem::path path = {});

  std::vector<nlohmann::json> ReadAll() const;
  void Append(const nlohmann::json &event);
  const std::filesystem::path &path() const { return path_; }

 private:
  std::filesystem::path path_;
  std::ofstream out_;
  std::vector<nlohmann::json> memory_;
};

class Project {
 public:
  Project(ProjectConfig config, std::shared_ptr<const Corpus> corpus);

  const ProjectConfig &config() const { return config_; }
  const Corpus &corpus() const { return *corpus_; }
  const std::vector<TaskItem> &items() const { return items_; }
  const std::vector<Assignment> &assignments() const { return assignments_; }
  const std::vector<Submission> &history() const { return history_; }

  // Annotator owning `token`; nullopt for an unknown token.
  std::optional<std::string> AnnotatorForToken(std::string_view token) const;

  // First open assignment of the annotator (calibration items first),
  // marked in progress. nullopt when none is left.
  std::optional<Assignment> NextTask(const std::string &annotator);

  // Validates and records a submission; returns the new revision.
  int64_t Submit(const std::string &annotator, const std::string &item,
                 const nlohmann::json &payload, int64_t revision);

  // Builds the records a payload would store, or throws
  // Error(kValidationError).
  std::vector<nlohmann::json> ValidatePayload(const std::string &annotator,
                                              const std::string &item,
                                              const nlohmann::json &payload)
      const;

  // Context shown to the annotator for an item.
  nlohmann::json TaskPayload(const Assignment &assignment) const;

  // Corpus-format view of the latest submission per assignment.
  CorpusData ExportData() const;
  // Calibration submissions, latest per assignment.
  std::vector<nlohmann::json> CalibrationRecords() const;

  nlohmann::json Summary() const;

  // Replay hooks used when loading the event log.
  void ApplyIssue(const std::string &annotator, const std::string &item);
  void ApplySubmit(const Submission &submission);

 private:
  Assignment &FindAssignment(const std::string &annotator,
                             const std::string &item);
  const Assignment *FindAssignmentOrNull(const std::string &annotator,
                                         const std::string &item) const;

  ProjectConfig config_;
  std::shared_ptr<const Corpus> corpus_;
  std::vector<TaskItem> items_;
  std::vector<Assignment> assignments_;
  std::map<std::pair<std::string, std::string>, size_t> assignment_index_;
  std::vector<Submission> history_;
};

// Thread-safe front end over projects and the event log.
class AnnotationService {
 public:
  // Replays `log_path` when it exists.
  explicit AnnotationService(std::filesystem::path log_path = {});

  nlohmann::json CreateProject(const nlohmann::json &config);
  nlohmann::json GetProject(const std::string &id) const;
  nlohmann::json ListProjects() const;
  void DeleteProject(const std::string &id);

  // Resolves a bearer token to an annotator; throws Error(kUnauthorized).
  std::string Authenticate(const std::string &project,
                           std::string_view token) const;

  // Task payload or null when the annotator has nothing left.
  nlohmann::json NextTask(const std::string &project,
                          const std::string &annotator);
  nlohmann::json Submit(const std::string &project,
                        const std::string &annotator,
                        const std::string &item, const nlohmann::json &payload,
                        int64_t revision);

  CorpusData ExportData(const std::string &project) const;
  // Writes corpus files, templates.json and calibration.jsonl to `dir`.
  void Export(const std::string &project,
              const std::filesystem::path &dir) const;
  // File name -> content, as written by Export.
  std::map<std::string, std::string> ExportFiles(
      const std::string &project) const;

  nlohmann::json Templates(const std::string &project) const;

 private:
  Project &Get(const std::string &id);
  const Project &Get(const std::string &id) const;
  void CreateFromConfig(const ProjectConfig &config);

  mutable std::mutex mu_;
  EventLog log_;
  std::map<std::string, std::unique_ptr<Project>> projects_;
  std::map<std::string, std::shared_ptr<const Corpus>> corpora_;
};

// JSON schemas of the submission payloads.
nlohmann::json PayloadSchemas();

}  // namespace typic

#endif  // TYPIC_SERVICE_H_
