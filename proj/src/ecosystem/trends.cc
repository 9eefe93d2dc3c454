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

#include "chartqa/ecosystem/trends.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "chartqa/core/error.h"
#include "chartqa/core/stem.h"

namespace chartqa {
namespace {

double Pct(int num, int den) { return den == 0 ? 0.0 : 100.0 * num / den; }
double Per(int num, int den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / den;
}

}  // namespace

double TemplateMetrics::variable_ratio() const {
  return Pct(variable_charts, charts);
}
double TemplateMetrics::variable_intensity() const {
  return Per(variables, variable_charts);
}
double TemplateMetrics::duplicate_ratio() const {
  return Pct(duplicate_charts, charts);
}
double TemplateMetrics::duplicate_intensity() const {
  return Per(duplicate_values, duplicate_charts);
}
double TemplateMetrics::unrenderable_ratio() const {
  return Pct(unrenderable_charts, charts);
}

TemplateMetrics SummarizeTemplates(const std::vector<QualityReport>& reports) {
  TemplateMetrics t;
  t.charts = static_cast<int>(reports.size());
  for (const auto& r : reports) {
    if (r.has_variable_values()) ++t.variable_charts;
    t.variables += r.variable_value_count;
    if (r.has_duplicates()) ++t.duplicate_charts;
    t.duplicate_groups += static_cast<int>(r.duplicate.groups.size());
    t.duplicate_values += r.duplicate.total_duplicate_values;
    if (!r.render_failures.empty()) ++t.unrenderable_charts;
  }
  return t;
}

std::vector<std::pair<std::string, double>> SnapshotSummary::Metrics() const {
  std::vector<std::pair<std::string, double>> m = {
      {"maintainers", maintainers.maintainers},
      {"maintainer_sets", maintainers.sets},
      {"avg_charts_per_maintainer", maintainers.avg_charts_per_maintainer},
      {"avg_charts_per_set", maintainers.avg_charts_per_set},
      {"max_charts_per_set", maintainers.max_charts_per_set},
      {"avg_maintainers_per_set", maintainers.avg_maintainers_per_set},
      {"max_maintainers_per_set", maintainers.max_maintainers_per_set},
      {"alias_names", alias_names},
      {"charts", charts},
      {"unique_charts", stems},
      {"no_maintainer", no_maintainer},
      {"name_collision", name_collision},
      {"multiple_versions", multiple_versions},
  };
  if (templates) {
    m.push_back({"variable_charts_ratio", templates->variable_ratio()});
    m.push_back({"variable_charts_intensity", templates->variable_intensity()});
    m.push_back({"duplicate_charts_ratio", templates->duplicate_ratio()});
    m.push_back(
        {"duplicate_charts_intensity", templates->duplicate_intensity()});
    m.push_back({"unrenderable_template_ratio", templates->unrenderable_ratio()});
  }
  return m;
}

SnapshotSummary SummarizeSnapshot(const std::string& id,
                                  const RepoIndex& index, IdentityMode mode,
                                  const std::vector<QualityReport>* quality) {
  SnapshotSummary s;
  s.id = id;
  s.charts = static_cast<int>(index.entries.size());
  std::set<StemName> stems;
  for (const auto& e : index.entries) stems.insert(e.chart.stem);
  s.stems = static_cast<int>(stems.size());
  if (s.stems > 0) {
    s.versioning_overhead = static_cast<double>(s.charts - s.stems) / s.stems;
  }
  s.maintainers = ComputeMaintainerSets(index, mode).metrics;
  const IrregularityReport irr = DetectIrregularities(index);
  s.no_maintainer = static_cast<int>(irr.no_maintainer.size());
  s.name_collision = static_cast<int>(irr.name_collision.size());
  s.multiple_versions = static_cast<int>(irr.multiple_versions.size());
  s.alias_names = static_cast<int>(irr.alias_names.size());
  if (quality) s.templates = SummarizeTemplates(*quality);
  return s;
}

std::optional<PeriodSpec> ParsePeriodSpec(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ':')) parts.push_back(part);
  if (parts.size() < 3 || parts.size() > 4) return std::nullopt;
  if (parts[0].empty() || parts[1].empty() || parts[2].empty()) {
    return std::nullopt;
  }
  PeriodSpec spec{parts[0], parts[1], parts[2], std::nullopt};
  if (parts.size() == 4) {
    try {
      std::size_t used = 0;
      const int m = std::stoi(parts[3], &used);
      if (used != parts[3].size() || m < 1) return std::nullopt;
      spec.months = m;
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  return spec;
}

int MonthsBetween(const std::string& from_id, const std::string& to_id) {
  const auto days = std::chrono::duration_cast<std::chrono::days>(
                        ParseTimestamp(to_id) - ParseTimestamp(from_id))
                        .count();
  return std::max(1, static_cast<int>(std::lround(days / 30.44)));
}

std::optional<double> MonthlyGrowth(double start, double end, int months) {
  if (start <= 0 || end < 0 || months < 1) return std::nullopt;
  return 100.0 * (std::pow(end / start, 1.0 / months) - 1.0);
}

PeriodMetrics ComputePeriod(
    const std::vector<const Snapshot*>& snapshots, const PeriodSpec& spec,
    IdentityMode mode,
    const std::map<std::string, std::vector<QualityReport>>* quality) {
  std::vector<const Snapshot*> in;
  for (const Snapshot* s : snapshots) {
    if (s->id >= spec.from_id && s->id <= spec.to_id) in.push_back(s);
  }
  std::sort(in.begin(), in.end(),
            [](const Snapshot* a, const Snapshot* b) { return a->id < b->id; });
  if (in.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "period " + spec.name + " covers fewer than two snapshots");
  }
  PeriodMetrics pm;
  pm.spec = spec;
  const Snapshot& first = *in.front();
  const Snapshot& last = *in.back();
  pm.months = spec.months ? *spec.months : MonthsBetween(first.id, last.id);
  pm.days = static_cast<int>(
      std::chrono::duration_cast<std::chrono::days>(
          ParseTimestamp(last.id) - ParseTimestamp(first.id))
          .count());

  auto quality_of = [&](const std::string& id)
      -> const std::vector<QualityReport>* {
    if (!quality) return nullptr;
    auto it = quality->find(id);
    return it == quality->end() ? nullptr : &it->second;
  };
  pm.start = SummarizeSnapshot(first.id, first.index, mode, quality_of(first.id));
  pm.end = SummarizeSnapshot(last.id, last.index, mode, quality_of(last.id));

  pm.chart_growth =
      MonthlyGrowth(pm.start.charts, pm.end.charts, pm.months).value_or(0.0);
  pm.stem_growth =
      MonthlyGrowth(pm.start.stems, pm.end.stems, pm.months).value_or(0.0);

  std::set<StemName> changed;
  for (std::size_t i = 1; i < in.size(); ++i) {
    for (const auto& s : DetectChanges(*in[i - 1], *in[i]).changed_stems()) {
      changed.insert(s);
    }
  }
  pm.start_charts = pm.start.charts;
  for (const auto& e : first.index.entries) {
    if (changed.count(e.chart.stem)) ++pm.changed_charts;
  }
  pm.changed_pct = Pct(pm.changed_charts, pm.start_charts) / pm.months;

  const auto a = pm.start.Metrics();
  const auto b = pm.end.Metrics();
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i].first != b[i].first) continue;
    pm.deltas.push_back({a[i].first, a[i].second, b[i].second,
                         MonthlyGrowth(a[i].second, b[i].second, pm.months)});
  }
  return pm;
}

TrendTable ComputeTrends(
    const std::vector<Snapshot>& snapshots,
    const std::vector<PeriodSpec>& periods, IdentityMode mode,
    const std::map<std::string, std::vector<QualityReport>>* quality) {
  std::vector<const Snapshot*> ptrs;
  for (const auto& s : snapshots) ptrs.push_back(&s);
  TrendTable table;
  for (const auto& spec : periods) {
    table.periods.push_back(ComputePeriod(ptrs, spec, mode, quality));
  }
  if (table.periods.empty()) return table;
  const double n = static_cast<double>(table.periods.size());
  std::map<std::string, std::pair<double, int>> sums;
  std::vector<std::string> order;
  for (const auto& p : table.periods) {
    table.avg_chart_growth += p.chart_growth / n;
    table.avg_stem_growth += p.stem_growth / n;
    table.avg_changed_pct += p.changed_pct / n;
    for (const auto& d : p.deltas) {
      if (!sums.count(d.name)) order.push_back(d.name);
      auto& [sum, count] = sums[d.name];
      if (d.monthly_change) {
        sum += *d.monthly_change;
        ++count;
      }
    }
  }
  for (const auto& name : order) {
    const auto& [sum, count] = sums[name];
    MetricDelta d;
    d.name = name;
    if (count > 0) d.monthly_change = sum / count;
    table.avg_deltas.push_back(d);
  }
  return table;
}

}  // namespace chartqa
