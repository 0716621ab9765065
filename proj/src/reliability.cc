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

#include "typic/reliability.h"

#include <set>
#include <sstream>
#include <unordered_map>

#include "typic/error.h"

namespace typic {

using nlohmann::json;

std::vector<std::string> ReliabilityData::Annotators() const {
  std::set<std::string> annotators;
  for (const ReliabilityItem &item : items) {
    for (const auto &[annotator, value] : item.ratings) {
      annotators.insert(annotator);
    }
  }
  return {annotators.begin(), annotators.end()};
}

ReliabilityData ParseReliabilityJsonLines(std::string_view text) {
  ReliabilityData data;
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) continue;
    try {
      json j = json::parse(line);
      ReliabilityItem item;
      item.id = j.at("item").get<std::string>();
      for (const auto &[annotator, value] : j.at("ratings").items()) {
        item.ratings[annotator] =
            value.is_string() ? value.get<std::string>() : value.dump();
      }
      data.items.push_back(std::move(item));
    } catch (const json::exception &e) {
      throw Error(ErrorCode::kSchemaError,
                  "reliability line " + std::to_string(number) + ": " +
                      e.what());
    }
  }
  return data;
}

ReliabilityData LoadReliabilityFile(const std::filesystem::path &path) {
  return ParseReliabilityJsonLines(ReadFile(path));
}

std::string ReliabilityJsonLines(const ReliabilityData &data) {
  std::string out;
  for (const ReliabilityItem &item : data.items) {
    out += json{{"item", item.id}, {"ratings", item.ratings}}.dump();
    out += '\n';
  }
  return out;
}

ReliabilityData TemplateSelectionData(const Corpus &corpus,
                                      bool overlap_only) {
  std::vector<std::string> order;
  std::unordered_map<std::string, ReliabilityItem> units;
  std::map<std::pair<std::string, std::string>, int> ordinal;
  auto add = [&](const TemplatedDiagnosis &d) {
    int k = ordinal[{d.comment_id, d.annotator_id}]++;
    std::string id = d.comment_id + "#" + std::to_string(k);
    auto [it, inserted] = units.try_emplace(id);
    if (inserted) {
      it->second.id = id;
      order.push_back(id);
    }
    it->second.ratings[d.annotator_id] = d.label.name();
  };
  for (const auto &d : corpus.diagnoses()) add(d);
  for (const auto &d : corpus.overlap_diagnoses()) add(d);

  ReliabilityData data;
  for (const std::string &id : order) {
    ReliabilityItem &item = units.at(id);
    if (overlap_only && item.ratings.size() < 2) continue;
    data.items.push_back(std::move(item));
  }
  return data;
}

ReliabilityData InformativenessData(const Corpus &corpus) {
  std::vector<std::string> order;
  std::unordered_map<std::string, ReliabilityItem> units;
  for (const InformativenessJudgment &j : corpus.judgments()) {
    auto [it, inserted] = units.try_emplace(j.diagnosis_id);
    if (inserted) {
      it->second.id = j.diagnosis_id;
      order.push_back(j.diagnosis_id);
    }
    it->second.ratings[j.worker_id] = std::to_string(j.score);
  }
  ReliabilityData data;
  for (const std::string &id : order) data.items.push_back(units.at(id));
  return data;
}

}  // namespace typic
