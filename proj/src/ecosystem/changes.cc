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

#include "chartqa/ecosystem/changes.h"

#include <algorithm>

namespace chartqa {
namespace {

using Key = std::pair<std::string, std::string>;

struct State {
  ChartRef chart;
  std::string digest;
};

std::map<Key, State> Inventory(
    const RepoIndex& index, const std::map<std::string, std::string>& digests) {
  std::map<Key, State> out;
  for (const auto& e : index.entries) {
    State s{e.chart, ""};
    auto it = digests.find(e.chart.file_name);
    if (it != digests.end()) {
      s.digest = it->second;
    } else if (e.digest) {
      s.digest = *e.digest;
    }
    out.emplace(Key{e.chart.name, e.chart.version}, std::move(s));
  }
  return out;
}

bool ByVersion(const ChartRef& a, const ChartRef& b) {
  if (a.version != b.version) return a.version < b.version;
  return a < b;
}

}  // namespace

std::set<StemName> ChangeSet::touched_stems() const {
  std::set<StemName> out = changed_stems();
  for (const auto& c : added) out.insert(c.stem);
  for (const auto& c : removed) out.insert(c.stem);
  return out;
}

std::set<StemName> ChangeSet::changed_stems() const {
  std::set<StemName> out;
  for (const auto& c : updated) out.insert(c.stem);
  for (const auto& [from, to] : vupdates) {
    out.insert(from.stem);
    out.insert(to.stem);
  }
  return out;
}

ChangeSet DetectChanges(const std::string& from_id, const RepoIndex& a,
                        const std::map<std::string, std::string>& a_digests,
                        const std::string& to_id, const RepoIndex& b,
                        const std::map<std::string, std::string>& b_digests) {
  ChangeSet cs;
  cs.from_id = from_id;
  cs.to_id = to_id;
  const auto before = Inventory(a, a_digests);
  const auto after = Inventory(b, b_digests);

  std::map<StemName, std::vector<ChartRef>> removed, added;
  for (const auto& [key, s] : before) {
    auto it = after.find(key);
    if (it == after.end()) {
      removed[s.chart.stem].push_back(s.chart);
    } else if (!s.digest.empty() && !it->second.digest.empty() &&
               s.digest != it->second.digest) {
      cs.updated.push_back(it->second.chart);
    }
  }
  for (const auto& [key, s] : after) {
    if (!before.count(key)) added[s.chart.stem].push_back(s.chart);
  }

  for (auto& [stem, gone] : removed) {
    std::sort(gone.begin(), gone.end(), ByVersion);
    auto it = added.find(stem);
    std::size_t paired = 0;
    if (it != added.end()) {
      auto& fresh = it->second;
      std::sort(fresh.begin(), fresh.end(), ByVersion);
      paired = std::min(gone.size(), fresh.size());
      for (std::size_t i = 0; i < paired; ++i) {
        cs.vupdates.emplace_back(gone[i], fresh[i]);
      }
      fresh.erase(fresh.begin(), fresh.begin() + static_cast<long>(paired));
    }
    cs.removed.insert(cs.removed.end(), gone.begin() + static_cast<long>(paired),
                      gone.end());
  }
  for (const auto& [stem, fresh] : added) {
    cs.added.insert(cs.added.end(), fresh.begin(), fresh.end());
  }
  std::sort(cs.added.begin(), cs.added.end());
  std::sort(cs.removed.begin(), cs.removed.end());
  std::sort(cs.updated.begin(), cs.updated.end());
  return cs;
}

ChangeSet DetectChanges(const Snapshot& a, const Snapshot& b) {
  return DetectChanges(a.id, a.index, a.content_digests, b.id, b.index,
                       b.content_digests);
}

}  // namespace chartqa
