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

#ifndef TYPIC_METRICS_H_
#define TYPIC_METRICS_H_

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "typic/corpus.h"
#include "typic/fraction.h"

namespace typic {

// Share of diagnoses whose label is a template rather than NotApplicable.
// Throws Error(kEmptyInput).
Fraction Coverage(std::span<const TemplatedDiagnosis> diagnoses);

// Majority label of one item's informativeness votes.
struct AggregatedScore {
  std::string item_id;
  int score = 0;
  std::map<int, int64_t> vote_counts;  // score -> votes
};

// Most frequent score; a tie among the top counts resolves to the lowest
// (worse) tied score. Errors: kEmptyInput, kInvalidArgument (score outside
// 1-3).
AggregatedScore MajorityVote(std::span<const int> scores,
                             std::string item_id = "");

// Groups judgments by diagnosis (in order of first appearance) and votes.
std::vector<AggregatedScore> AggregateJudgments(
    std::span<const InformativenessJudgment> judgments);

// score -> share of items. Only scores that occur are listed.
// Throws Error(kEmptyInput).
std::map<int, Fraction> InformativenessDistribution(
    std::span<const AggregatedScore> aggregated);

// label -> count, NotApplicable included. Throws Error(kEmptyInput).
std::map<std::string, int64_t> TemplateDistribution(
    std::span<const TemplatedDiagnosis> diagnoses);

// Labels given to one (counterargument, target sentences) pair.
struct TargetGroup {
  std::string counterargument_id;
  std::vector<int> target;
  std::vector<Label> labels;
};

// Groups diagnoses by their comment's counterargument and target set, in
// order of first appearance.
std::vector<TargetGroup> GroupByTarget(
    const Corpus &corpus, std::span<const TemplatedDiagnosis> diagnoses);

// k -> share of groups with k distinct template labels. NotApplicable does
// not count as a template; groups with no template label are skipped.
// Throws Error(kEmptyInput) when no group remains.
std::map<int, Fraction> DiagnosesPerTarget(std::span<const TargetGroup> groups);

// Share of each extractability class among fillers that carry one; fillers
// outside the analysed sample are ignored. Throws Error(kEmptyInput).
std::map<Extractability, Fraction> ExtractabilityDistribution(
    std::span<const Filler> fillers);

// All fillers of the given diagnoses, in order.
std::vector<Filler> CollectFillers(std::span<const TemplatedDiagnosis> diagnoses);

// Diagnoses whose comment is in `comment_ids`.
std::vector<TemplatedDiagnosis> FilterByComments(
    std::span<const TemplatedDiagnosis> diagnoses,
    std::span<const std::string> comment_ids);

// Plot-ready tab-separated tables with a header row.
std::string DistributionTsv(const std::string &key_header,
                            const std::map<std::string, int64_t> &counts);
std::string DistributionTsv(const std::string &key_header,
                            const std::map<std::string, Fraction> &shares);

}  // namespace typic

#endif  // TYPIC_METRICS_H_
