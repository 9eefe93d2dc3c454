// Copyright 2026 The chartqa Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CHARTQA_TESTS_SUPPORT_ORACLES_H_
#define CHARTQA_TESTS_SUPPORT_ORACLES_H_

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "chartqa/analysis/duplicates.h"
#include "chartqa/core/chart.h"
#include "chartqa/core/value_tree.h"
#include "chartqa/render/flatten.h"

namespace chartqa::testing {

// Character-level interpreter of the stem rule.
std::string OracleStem(const std::string& file_name);

std::string RandomChartFileName(std::mt19937_64& rng);

// A generated template source together with the literal leaves it holds.
struct OracleLeaf {
  std::string key_path;
  std::string raw;        // scalar content without quotes
  std::string canonical;  // expected canonical form
  bool literal = true;    // false for templated and null leaves
};

struct RandomCorpus {
  ChartPackage package;
  std::vector<OracleLeaf> leaves;
};

// A chart of 1-3 templates with at most `max_leaves` scalar leaves drawn
// from a pool of values with known canonical forms.
RandomCorpus RandomDuplicateCorpus(std::mt19937_64& rng, int max_leaves);

struct OracleGroup {
  std::string value;
  std::set<std::string> occurrences;
  bool operator==(const OracleGroup&) const = default;
};

std::vector<OracleGroup> OracleDuplicates(const std::vector<OracleLeaf>& leaves,
                                          const DuplicateConfig& config);

// Recursive walk of a tree; independent of FlattenTree.
void OracleFlatten(const ValueTree& tree, const std::string& prefix,
                   std::vector<FlatLeaf>& out);

// Two-sided p-value over all 2^n sign assignments of the mid-ranks of the
// non-zero differences.
double OracleSignFlipP(const std::vector<double>& x,
                       const std::vector<double>& y);

}  // namespace chartqa::testing

#endif  // CHARTQA_TESTS_SUPPORT_ORACLES_H_
