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

#include "typic/metrics.h"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "typic/error.h"

namespace typic {

Fraction Coverage(std::span<const TemplatedDiagnosis> diagnoses) {
  if (diagnoses.empty()) {
    throw Error(ErrorCode::kEmptyInput, "coverage of an empty list");
  }
  int64_t covered = std::count_if(
      diagnoses.begin(), diagnoses.end(),
      [](const TemplatedDiagnosis &d) { return !d.label.is_not_applicable(); });
  return {covered, static_cast<int64_t>(diagnoses.size())};
}

AggregatedScore MajorityVote(std::span<const int> scores, std::string item_id) {
  if (scores.empty()) {
    throw Error(ErrorCode::kEmptyInput, "no votes for item " + item_id);
  }
  AggregatedScore result;
  result.item_id = std::move(item_id);
  for (int score : scores) {
    if (score < 1 || score > 3) {
      throw Error(ErrorCode::kInvalidArgument,
                  "score " + std::to_string(score) + " outside 1-3");
    }
    ++result.vote_counts[score];
  }
  // Ascending score order, so the first maximum is the worse one on ties.
  int64_t best = -1;
  for (const auto &[score, votes] : result.vote_counts) {
    if (votes > best) {
      best = votes;
      result.score = score;
    }
  }
  return result;
}

std::vector<AggregatedScore> AggregateJudgments(
    std::span<const InformativenessJudgment> judgments) {
  std::vector<std::string> order;
  std::unordered_map<std::string, std::vector<int>> votes;
  for (const InformativenessJudgment &j : judgments) {
    auto [it, inserted] = votes.try_emplace(j.diagnosis_id);
    if (inserted) order.push_back(j.diagnosis_id);
    it->second.push_back(j.score);
  }
  std::vector<AggregatedScore> out;
  out.reserve(order.size());
  for (const std::string &id : order) {
    out.push_back(MajorityVote(votes.at(id), id));
  }
  return out;
}

std::map<int, Fraction> InformativenessDistribution(
    std::span<const AggregatedScore> aggregated) {
  if (aggregated.empty()) {
    throw Error(ErrorCode::kEmptyInput, "no aggregated scores");
  }
  std::map<int, int64_t> counts;
  for (const AggregatedScore &a : aggregated) ++counts[a.score];
  std::map<int, Fraction> out;
  for (const auto &[score, count] : counts) {
    out[score] = {count, static_cast<int64_t>(aggregated.size())};
  }
  return out;
}

std::map<std::string, int64_t> TemplateDistribution(
    std::span<const TemplatedDiagnosis> diagnoses) {
  if (diagnoses.empty()) {
    throw Error(ErrorCode::kEmptyInput, "no diagnoses");
  }
  std::map<std::string, int64_t> counts;
  for (const TemplatedDiagnosis &d : diagnoses) ++counts[d.label.name()];
  return counts;
}

std::vector<TargetGroup> GroupByTarget(
    const Corpus &corpus, std::span<const TemplatedDiagnosis> diagnoses) {
  std::vector<TargetGroup> groups;
  std::map<std::pair<std::string, std::vector<int>>, size_t> index;
  for (const TemplatedDiagnosis &d : diagnoses) {
    const DiagnosticComment *comment = corpus.FindComment(d.comment_id);
    if (comment == nullptr) {
      throw Error(ErrorCode::kDanglingReference,
                  d.id + ": unknown comment " + d.comment_id);
    }
    auto key = std::make_pair(comment->counterargument_id, comment->target);
    auto [it, inserted] = index.try_emplace(key, groups.size());
    if (inserted) {
      groups.push_back({comment->counterargument_id, comment->target, {}});
    }
    groups[it->second].labels.push_back(d.label);
  }
  return groups;
}

std::map<int, Fraction> DiagnosesPerTarget(std::span<const TargetGroup> groups) {
  std::map<int, int64_t> counts;
  int64_t total = 0;
  for (const TargetGroup &group : groups) {
    std::set<std::string> distinct;
    for (const Label &label : group.labels) {
      if (!label.is_not_applicable()) distinct.insert(label.name());
    }
    if (distinct.empty()) continue;
    ++counts[static_cast<int>(distinct.size())];
    ++total;
  }
  if (total == 0) {
    throw Error(ErrorCode::kEmptyInput, "no target group with a template");
  }
  std::map<int, Fraction> out;
  for (const auto &[k, count] : counts) out[k] = {count, total};
  return out;
}

std::map<Extractability, Fraction> ExtractabilityDistribution(
    std::span<const Filler> fillers) {
  std::map<Extractability, int64_t> counts;
  int64_t total = 0;
  for (const Filler &filler : fillers) {
    if (!filler.extractability) continue;
    ++counts[*filler.extractability];
    ++total;
  }
  if (total == 0) {
    throw Error(ErrorCode::kEmptyInput, "no filler carries extractability");
  }
  std::map<Extractability, Fraction> out;
  for (const auto &[value, count] : counts) out[value] = {count, total};
  return out;
}

std::vector<Filler> CollectFillers(
    std::span<const TemplatedDiagnosis> diagnoses) {
  std::vector<Filler> out;
  for (const TemplatedDiagnosis &d : diagnoses) {
    for (const auto &[slot, filler] : d.fillers) out.push_back(filler);
  }
  return out;
}

std::vector<TemplatedDiagnosis> FilterByComments(
    std::span<const TemplatedDiagnosis> diagnoses,
    std::span<const std::string> comment_ids) {
  std::unordered_set<std::string> keep(comment_ids.begin(), comment_ids.end());
  std::vector<TemplatedDiagnosis> out;
  for (const TemplatedDiagnosis &d : diagnoses) {
    if (keep.contains(d.comment_id)) out.push_back(d);
  }
  return out;
}

std::string DistributionTsv(const std::string &key_header,
                            const std::map<std::string, int64_t> &counts) {
  std::string out = key_header + "\tcount\n";
  for (const auto &[key, count] : counts) {
    out += key + "\t" + std::to_string(count) + "\n";
  }
  return out;
}

std::string DistributionTsv(const std::string &key_header,
                            const std::map<std::string, Fraction> &shares) {
  std::string out = key_header + "\tcount\ttotal\tpercent\n";
  for (const auto &[key, share] : shares) {
    out += key + "\t" + std::to_string(share.numerator) + "\t" +
           std::to_string(share.denominator) + "\t" + share.Percent(1) + "\n";
  }
  return out;
}

}  // namespace typic
