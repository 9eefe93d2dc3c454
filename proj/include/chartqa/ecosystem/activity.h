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

#ifndef CHARTQA_ECOSYSTEM_ACTIVITY_H_
#define CHARTQA_ECOSYSTEM_ACTIVITY_H_

#include <map>
#include <vector>

#include "chartqa/core/chart.h"
#include "chartqa/ecosystem/changes.h"

namespace chartqa {

enum class ActivityLevel { kRegularlyChanged, kInfrequentlyChanged, kUnchanged };

const char* ActivityLevelName(ActivityLevel level);

struct ActivityProfile {
  StemName stem;
  int days_observed = 0;
  int days_changed = 0;
  double dcr = 0;  // percent
  ActivityLevel level = ActivityLevel::kUnchanged;
};

// One flag per observed day.
using ChangeHistories = std::map<StemName, std::vector<bool>>;

// dcr > 50 regular, 0 < dcr <= 50 infrequent, 0 unchanged.
ActivityLevel ClassifyDcr(double dcr);

// Throws Error(kInvalidArgument) for an empty history.
std::vector<ActivityProfile> ClassifyActivity(const ChangeHistories& histories);

// Histories of the stems present in the first snapshot, one day per
// consecutive pair. Throws Error(kInvalidArgument) with fewer than two.
ChangeHistories BuildHistories(const std::vector<Snapshot>& snapshots);
ChangeHistories BuildHistories(const std::vector<StemName>& stems,
                               const std::vector<ChangeSet>& days);

struct ActivityCluster {
  ActivityLevel level = ActivityLevel::kUnchanged;
  int charts = 0;
  double mean_dcr = 0;
  double percentage = 0;  // of all profiles
};

// Always three clusters, regular first.
std::vector<ActivityCluster> SummarizeActivity(
    const std::vector<ActivityProfile>& profiles);

}  // namespace chartqa

#endif  // CHARTQA_ECOSYSTEM_ACTIVITY_H_
