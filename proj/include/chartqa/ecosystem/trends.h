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

#ifndef CHARTQA_ECOSYSTEM_TRENDS_H_
#define CHARTQA_ECOSYSTEM_TRENDS_H_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chartqa/analysis/quality.h"
#include "chartqa/ecosystem/changes.h"
#include "chartqa/ecosystem/irregularities.h"
#include "chartqa/ecosystem/maintainers.h"
#include "chartqa/ingest/snapshot.h"

namespace chartqa {

struct TemplateMetrics {
  int charts = 0;
  int variable_charts = 0;
  int variables = 0;
  int duplicate_charts = 0;
  int duplicate_groups = 0;
  int duplicate_values = 0;
  int unrenderable_charts = 0;

  double variable_ratio() const;      // percent of charts
  double variable_intensity() const;  // variables per variable chart
  double duplicate_ratio() const;
  double duplicate_intensity() const; // duplicate values per duplicate chart
  double unrenderable_ratio() const;
};

TemplateMetrics SummarizeTemplates(const std::vector<QualityReport>& reports);

struct SnapshotSummary {
  std::string id;
  int charts = 0;
  int stems = 0;
  double versioning_overhead = 0;
  MaintainerMetrics maintainers;
  int no_maintainer = 0;
  int name_collision = 0;
  int multiple_versions = 0;
  int alias_names = 0;
  std::optional<TemplateMetrics> templates;

  // Named values in table order.
  std::vector<std::pair<std::string, double>> Metrics() const;
};

SnapshotSummary SummarizeSnapshot(
    const std::string& id, const RepoIndex& index,
    IdentityMode mode = IdentityMode::kEmail,
    const std::vector<QualityReport>* quality = nullptr);

struct PeriodSpec {
  std::string name;
  std::string from_id;
  std::string to_id;  // inclusive
  std::optional<int> months;
};

// "name:from:to" or "name:from:to:months".
std::optional<PeriodSpec> ParsePeriodSpec(const std::string& text);

struct MetricDelta {
  std::string name;
  double start = 0;
  double end = 0;
  // Geometric monthly change in percent; empty when start is 0.
  std::optional<double> monthly_change;
};

struct PeriodMetrics {
  PeriodSpec spec;
  int months = 1;
  int days = 0;
  SnapshotSummary start;
  SnapshotSummary end;
  double chart_growth = 0;  // percent per month
  double stem_growth = 0;
  int changed_charts = 0;   // start charts whose stem was updated
  int start_charts = 0;
  double changed_pct = 0;   // per month
  std::vector<MetricDelta> deltas;
};

struct TrendTable {
  std::vector<PeriodMetrics> periods;
  // Arithmetic mean over periods of the monthly figures.
  double avg_chart_growth = 0;
  double avg_stem_growth = 0;
  double avg_changed_pct = 0;
  std::vector<MetricDelta> avg_deltas;  // start/end unused
};

// Calendar months between two ids (ISO dates): max(1, round(days / 30.44)).
int MonthsBetween(const std::string& from_id, const std::string& to_id);

// Growth of start -> end over the months, geometric, in percent.
std::optional<double> MonthlyGrowth(double start, double end, int months);

// The snapshots are ordered by id and carry no packages unless quality
// reports are given. quality, when set, is keyed by snapshot id.
// Throws Error(kInvalidArgument) when a period covers fewer than two
// snapshots.
PeriodMetrics ComputePeriod(
    const std::vector<const Snapshot*>& snapshots, const PeriodSpec& spec,
    IdentityMode mode,
    const std::map<std::string, std::vector<QualityReport>>* quality);

TrendTable ComputeTrends(
    const std::vector<Snapshot>& snapshots,
    const std::vector<PeriodSpec>& periods,
    IdentityMode mode = IdentityMode::kEmail,
    const std::map<std::string, std::vector<QualityReport>>* quality = nullptr);

}  // namespace chartqa

#endif  // CHARTQA_ECOSYSTEM_TRENDS_H_
