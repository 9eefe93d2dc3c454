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

#include "chartqa/ecosystem/activity.h"

#include <set>

#include "chartqa/core/error.h"

namespace chartqa {

const char* ActivityLevelName(ActivityLevel level) {
  switch (level) {
    case ActivityLevel::kRegularlyChanged:
      return "RegularlyChanged";
    case ActivityLevel::kInfrequentlyChanged:
      return "InfrequentlyChanged";
    case ActivityLevel::kUnchanged:
      return "Unchanged";
  }
  return "Unchanged";
}

ActivityLevel ClassifyDcr(double dcr) {
  if (dcr > 50.0) return ActivityLevel::kRegularlyChanged;
  if (dcr > 0.0) return ActivityLevel::kInfrequentlyChanged;
  return ActivityLevel::kUnchanged;
}

std::vector<ActivityProfile> ClassifyActivity(
    const ChangeHistories& histories) {
  std::vector<ActivityProfile> out;
  for (const auto& [stem, days] : histories) {
    if (days.empty()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "no observed days for " + stem.value());
    }
    ActivityProfile p;
    p.stem = stem;
    p.days_observed = static_cast<int>(days.size());
    for (bool changed : days) p.days_changed += changed ? 1 : 0;
    p.dcr = 100.0 * p.days_changed / p.days_observed;
    p.level = ClassifyDcr(p.dcr);
    out.push_back(std::move(p));
  }
  return out;
}

ChangeHistories BuildHistories(const std::vector<StemName>& stems,
                               const std::vector<ChangeSet>& days) {
  ChangeHistories out;
  for (const auto& s : stems) out[s];
  for (const auto& day : days) {
    const std::set<StemName> touched = day.touched_stems();
    for (auto& [stem, flags] : out) flags.push_back(touched.count(stem) > 0);
  }
  return out;
}

ChangeHistories BuildHistories(const std::vector<Snapshot>& snapshots) {
  if (snapshots.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "activity needs at least two snapshots");
  }
  std::set<StemName> stems;
  for (const auto& e : snapshots.front().index.entries) stems.insert(e.chart.stem);
  std::vector<ChangeSet> days;
  for (std::size_t i = 1; i < snapshots.size(); ++i) {
    days.push_back(DetectChanges(snapshots[i - 1], snapshots[i]));
  }
  return BuildHistories(std::vector<StemName>(stems.begin(), stems.end()), days);
}

std::vector<ActivityCluster> SummarizeActivity(
    const std::vector<ActivityProfile>& profiles) {
  std::vector<ActivityCluster> out(3);
  out[0].level = ActivityLevel::kRegularlyChanged;
  out[1].level = ActivityLevel::kInfrequentlyChanged;
  out[2].level = ActivityLevel::kUnchanged;
  for (const auto& p : profiles) {
    auto& c = out[static_cast<int>(p.level)];
    ++c.charts;
    c.mean_dcr += p.dcr;
  }
  for (auto& c : out) {
    if (c.charts > 0) c.mean_dcr /= c.charts;
    if (!profiles.empty()) {
      c.percentage = 100.0 * c.charts / static_cast<double>(profiles.size());
    }
  }
  return out;
}

}  // namespace chartqa
