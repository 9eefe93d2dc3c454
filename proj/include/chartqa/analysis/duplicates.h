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

#ifndef CHARTQA_ANALYSIS_DUPLICATES_H_
#define CHARTQA_ANALYSIS_DUPLICATES_H_

#include <string>
#include <vector>

#include "chartqa/analysis/template_scan.h"
#include "chartqa/core/chart.h"

namespace chartqa {

struct DuplicateConfig {
  int threshold = 3;
  std::vector<std::string> blacklist = DefaultBlacklist();
  // Raw scalars shorter than this are ignored.
  std::size_t min_length = 2;

  static std::vector<std::string> DefaultBlacklist();
};

struct DuplicateGroup {
  std::string canonical_value;
  std::vector<std::string> occurrences;  // key paths, sorted
  int count = 0;
};

struct UnparseableTemplate {
  std::string template_path;
  std::string reason;
};

struct DuplicateReport {
  ChartRef chart;
  // Descending count, ties broken by value.
  std::vector<DuplicateGroup> groups;
  int total_duplicate_values = 0;
  int threshold_used = 0;
  std::vector<std::string> blacklist_used;
  std::vector<UnparseableTemplate> unparseable;

  bool empty() const { return groups.empty(); }
};

// Groups literal leaves by canonical value. Leaves that hold a directive,
// nulls, short scalars and blacklisted values never form a group.
DuplicateReport GroupDuplicates(const ChartRef& chart,
                                const std::vector<TemplateScan>& scans,
                                const DuplicateConfig& config);

// Throws Error(kInvalidArgument) when threshold < 2.
DuplicateReport DetectDuplicates(const ChartPackage& pkg,
                                 const DuplicateConfig& config);

}  // namespace chartqa

#endif  // CHARTQA_ANALYSIS_DUPLICATES_H_
