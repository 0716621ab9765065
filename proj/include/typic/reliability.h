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

#ifndef TYPIC_RELIABILITY_H_
#define TYPIC_RELIABILITY_H_

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "typic/corpus.h"

namespace typic {

// Ratings of one unit by any number of annotators; missing entries allowed.
struct ReliabilityItem {
  std::string id;
  std::map<std::string, std::string> ratings;  // annotator -> value

  bool operator==(const ReliabilityItem &other) const = default;
};

struct ReliabilityData {
  std::vector<ReliabilityItem> items;

  // Sorted, distinct annotator ids.
  std::vector<std::string> Annotators() const;
};

// JSON-lines reliability file: one {"item": id, "ratings": {annotator:
// value}} per line. Values may be strings or integers. Throws
// Error(kSchemaError) / Error(kIoError).
ReliabilityData ParseReliabilityJsonLines(std::string_view text);
ReliabilityData LoadReliabilityFile(const std::filesystem::path &path);
std::string ReliabilityJsonLines(const ReliabilityData &data);

// Template-selection ratings: one unit per (comment, k-th diagnosis of that
// comment by an annotator), over the main and overlap layers. Unit ids are
// "<comment id>#<k>". With `overlap_only`, units rated by a single
// annotator are dropped.
ReliabilityData TemplateSelectionData(const Corpus &corpus, bool overlap_only);

// Informativeness ratings: one unit per judged diagnosis, worker -> score.
ReliabilityData InformativenessData(const Corpus &corpus);

}  // namespace typic

#endif  // TYPIC_RELIABILITY_H_
