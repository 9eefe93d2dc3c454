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

#include "chartqa/ecosystem/irregularities.h"

#include <algorithm>
#include <map>

#include "chartqa/ecosystem/maintainers.h"

namespace chartqa {

IrregularityReport DetectIrregularities(const RepoIndex& index) {
  IrregularityReport report;
  report.charts = static_cast<int>(index.entries.size());
  std::map<StemName, int> per_stem;
  std::map<std::string, std::set<std::string>> names_by_email;

  for (const auto& entry : index.entries) {
    ++per_stem[entry.chart.stem];
    bool any = false;
    bool collision = false;
    for (const auto& m : entry.maintainers) {
      if (IdentityKey(m, IdentityMode::kEmail).empty()) continue;
      any = true;
      if (m.name && *m.name == entry.chart.name) collision = true;
      if (m.email) {
        const std::string email = NormalizeEmail(*m.email);
        if (email.empty()) continue;
        auto& names = names_by_email[email];
        if (m.name && !NormalizeName(*m.name).empty()) {
          names.insert(NormalizeName(*m.name));
        }
      }
    }
    if (!any) report.no_maintainer.push_back(entry.chart);
    if (collision) report.name_collision.push_back(entry.chart);
  }
  for (const auto& [stem, n] : per_stem) {
    if (n >= 2) report.multiple_versions.push_back(stem);
  }
  report.unique_emails = static_cast<int>(names_by_email.size());
  for (auto& [email, names] : names_by_email) {
    if (names.size() >= 2) report.alias_names.push_back({email, names});
  }
  std::sort(report.no_maintainer.begin(), report.no_maintainer.end());
  std::sort(report.name_collision.begin(), report.name_collision.end());
  return report;
}

}  // namespace chartqa
