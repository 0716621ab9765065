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

#ifndef TYPIC_TESTS_ORACLES_H_
#define TYPIC_TESTS_ORACLES_H_

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "typic/reliability.h"

// Brute-force reference implementations. They work from raw ratings and share
// no code with the library.
namespace typic::oracle {

// Kappa from a list of (first annotator, second annotator) labels.
// p_e is the mean agreement over all n*n cross pairings of the two columns.
double Kappa(const std::vector<std::pair<int, int>> &pairs);

// Alpha from its pairwise definition. Each unit lists the integer values it
// received; units with fewer than two values are not pairable. For the
// ordinal metric values are ordered numerically.
double Alpha(const std::vector<std::vector<int>> &units, bool ordinal);

struct Counts {
  int64_t tp = 0;
  int64_t fp = 0;
  int64_t fn = 0;
};

// Pooled label counts over instances given as sets of label indices.
Counts MicroCounts(const std::vector<std::set<int>> &gold,
                   const std::vector<std::set<int>> &pred);

// F1 as 2tp / (2tp + fp + fn); 1 when nothing is counted.
double MicroF1(const Counts &counts);

// Lowest score among the most frequent ones, found by enumeration.
int MajorityScore(const std::vector<int> &scores);

// Random instances for the agreement oracles.
std::vector<std::pair<int, int>> RandomPairs(std::mt19937_64 &rng);
std::vector<std::vector<int>> RandomUnits(std::mt19937_64 &rng);

// Well-formed pattern text with one to three distinct slots, literals drawn
// from ASCII and Japanese characters. `slots` receives the slot names in
// order of appearance.
std::string RandomPatternText(std::mt19937_64 &rng,
                              std::vector<std::string> *slots);

ReliabilityData ToReliability(const std::vector<std::pair<int, int>> &pairs);
ReliabilityData ToReliability(const std::vector<std::vector<int>> &units);

}  // namespace typic::oracle

#endif  // TYPIC_TESTS_ORACLES_H_
