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

#ifndef CHARTQA_ECOSYSTEM_CHANGES_H_
#define CHARTQA_ECOSYSTEM_CHANGES_H_

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "chartqa/core/chart.h"
#include "chartqa/ingest/snapshot.h"

namespace chartqa {

struct ChangeSet {
  std::string from_id;
  std::string to_id;
  std::vector<ChartRef> added;
  std::vector<ChartRef> removed;
  std::vector<ChartRef> updated;  // same name and version, new digest
  std::vector<std::pair<ChartRef, ChartRef>> vupdates;  // (removed, added)

  bool empty() const {
    return added.empty() && removed.empty() && updated.empty() &&
           vupdates.empty();
  }
  // Stems touched by any category.
  std::set<StemName> touched_stems() const;
  // Stems with an update or a vupdate.
  std::set<StemName> changed_stems() const;
};

// Digests come from the snapshot manifest, falling back to the index.
ChangeSet DetectChanges(const Snapshot& a, const Snapshot& b);

// Entries keyed by (name, version); digests keyed by file name.
ChangeSet DetectChanges(const std::string& from_id, const RepoIndex& a,
                        const std::map<std::string, std::string>& a_digests,
                        const std::string& to_id, const RepoIndex& b,
                        const std::map<std::string, std::string>& b_digests);

}  // namespace chartqa

#endif  // CHARTQA_ECOSYSTEM_CHANGES_H_
