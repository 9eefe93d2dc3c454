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

#include "chartqa/analysis/duplicates.h"

#include <algorithm>
#include <map>
#include <set>

#include "chartqa/core/error.h"

namespace chartqa {

std::vector<std::string> DuplicateConfig::DefaultBlacklist() {
  return {"v1", "extensions/v1beta1", "", "true", "false", "0", "1"};
}

DuplicateReport GroupDuplicates(const ChartRef& chart,
                                const std::vector<TemplateScan>& scans,
                                const DuplicateConfig& config) {
  DuplicateReport report;
  report.chart = chart;
  report.threshold_used = config.threshold;
  report.blacklist_used = config.blacklist;
  const std::set<std::string> blacklist(config.blacklist.begin(),
                                        config.blacklist.end());

  std::map<std::string, std::set<std::string>> by_value;
  for (const auto& scan : scans) {
    if (scan.error) {
      report.unparseable.push_back({scan.template_path, *scan.error});
      continue;
    }
    for (const auto& leaf : scan.leaves) {
      if (leaf.is_null || leaf.templated) continue;
      if (leaf.scalar.text.size() < config.min_length) continue;
      if (blacklist.count(leaf.canonical)) continue;
      by_value[leaf.canonical].insert(leaf.key_path);
    }
  }
  for (auto& [value, paths] : by_value) {
    const int count = static_cast<int>(paths.size());
    if (count < config.threshold) continue;
    report.groups.push_back(
        {value, std::vector<std::string>(paths.begin(), paths.end()), count});
    report.total_duplicate_values += count;
  }
  std::stable_sort(report.groups.begin(), report.groups.end(),
                   [](const DuplicateGroup& a, const DuplicateGroup& b) {
                     if (a.count != b.count) return a.count > b.count;
                     return a.canonical_value < b.canonical_value;
                   });
  return report;
}

DuplicateReport DetectDuplicates(const ChartPackage& pkg,
                                 const DuplicateConfig& config) {
  if (config.threshold < 2) {
    throw Error(ErrorCode::kInvalidArgument, "threshold must be at least 2");
  }
  return GroupDuplicates(pkg.ref(), ScanPackage(pkg), config);
}

}  // namespace chartqa
