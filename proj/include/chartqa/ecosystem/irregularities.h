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

#ifndef CHARTQA_ECOSYSTEM_IRREGULARITIES_H_
#define CHARTQA_ECOSYSTEM_IRREGULARITIES_H_

#include <set>
#include <string>
#include <vector>

#include "chartqa/core/chart.h"
#include "chartqa/ingest/repo_index.h"

namespace chartqa {

struct AliasIrregularity {
  std::string email;  // normalised
  std::set<std::string> names;
};

struct IrregularityReport {
  std::vector<ChartRef> no_maintainer;
  std::vector<ChartRef> name_collision;
  std::vector<StemName> multiple_versions;
  std::vector<AliasIrregularity> alias_names;
  int charts = 0;
  int unique_emails = 0;

  int total() const {
    return static_cast<int>(no_maintainer.size() + name_collision.size() +
                            multiple_versions.size() + alias_names.size());
  }
};

IrregularityReport DetectIrregularities(const RepoIndex& index);

}  // namespace chartqa

#endif  // CHARTQA_ECOSYSTEM_IRREGULARITIES_H_
