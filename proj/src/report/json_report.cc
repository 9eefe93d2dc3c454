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

#include "chartqa/report/json_report.h"

#include <algorithm>

namespace chartqa {
namespace {

double Median(std::vector<double> v) {
  if (v.empty()) return 0;
  std::sort(v.begin(), v.end());
  const std::size_t mid = v.size() / 2;
  return v.size() % 2 ? v[mid] : (v[mid - 1] + v[mid]) / 2.0;
}

Json Charts(const std::vector<ChartRef>& charts) {
  Json out = Json::array();
  for (const auto& c : charts) out.push_back(ToJson(c));
  return out;
}

Json OptionalNumber(const std::optional<double>& v) {
  return v ? Json(*v) : Json(nullptr);
}

}  // namespace

Json Metric(const std::string& name, double value,
            const std::string& base_metric, std::optional<double> base_value,
            std::optional<double> numerator, std::optional<double> denominator) {
  Json m;
  m["name"] = name;
  m["value"] = value;
  m["base_metric"] = base_metric;
  if (base_value) {
    m["base_value"] = *base_value;
    m["percentage"] = *base_value == 0 ? 0.0 : 100.0 * value / *base_value;
  }
  if (numerator && denominator) {
    m["numerator"] = *numerator;
    m["denominator"] = *denominator;
  }
  return m;
}

Json ToJson(const ChartRef& chart) {
  return Json{{"name", chart.name},
              {"version", chart.version},
              {"file_name", chart.file_name},
              {"stem", chart.stem.value()}};
}

Json ToJson(const RenderFailure& failure) {
  return Json{{"template_path", failure.template_path},
              {"category", FailureCategoryName(failure.category)},
              {"reason", failure.reason}};
}

Json ToJson(const DuplicateReport& report) {
  Json groups = Json::array();
  for (const auto& g : report.groups) {
    groups.push_back(Json{{"canonical_value", g.canonical_value},
                          {"count", g.count},
                          {"occurrences", g.occurrences}});
  }
  Json unparseable = Json::array();
  for (const auto& u : report.unparseable) {
    unparseable.push_back(
        Json{{"template_path", u.template_path}, {"reason", u.reason}});
  }
  return Json{{"chart", ToJson(report.chart)},
              {"groups", groups},
              {"group_count", report.groups.size()},
              {"total_duplicate_values", report.total_duplicate_values},
              {"threshold_used", report.threshold_used},
              {"blacklist_used", report.blacklist_used},
              {"unparseable_templates", unparseable}};
}

Json ToJson(const QualityReport& report) {
  Json failures = Json::array();
  for (const auto& f : report.render_failures) failures.push_back(ToJson(f));
  return Json{{"chart", ToJson(report.chart)},
              {"template_count", report.template_count},
              {"variable_value_count", report.variable_value_count},
              {"variable_paths", report.variable_paths},
              {"duplicates", ToJson(report.duplicate)},
              {"render_failures", failures}};
}

Json ToJson(const IrregularityReport& report) {
  Json stems = Json::array();
  for (const auto& s : report.multiple_versions) stems.push_back(s.value());
  Json aliases = Json::array();
  for (const auto& a : report.alias_names) {
    aliases.push_back(Json{{"email", a.email}, {"names", a.names}});
  }
  const double charts = report.charts;
  const double emails = report.unique_emails;
  Json metrics = Json::array();
  metrics.push_back(Metric("charts", charts, "charts", charts));
  metrics.push_back(Metric("no_maintainer", report.no_maintainer.size(),
                           "charts", charts));
  metrics.push_back(Metric("name_collision", report.name_collision.size(),
                           "charts", charts));
  metrics.push_back(Metric("multiple_versions",
                           report.multiple_versions.size(), "charts", charts));
  metrics.push_back(Metric("alias_names", report.alias_names.size(),
                           "unique_emails", emails));
  return Json{{"no_maintainer", Charts(report.no_maintainer)},
              {"name_collision", Charts(report.name_collision)},
              {"multiple_versions", stems},
              {"alias_names", aliases},
              {"metrics", metrics}};
}

Json ToJson(const MaintainerSetResult& result, IdentityMode mode) {
  const MaintainerMetrics& m = result.metrics;
  const double charts = m.charts;
  const double maintainers = m.maintainers;
  Json metrics = Json::array();
  metrics.push_back(Metric("maintainers", maintainers, "maintainers",
                           maintainers));
  metrics.push_back(Metric("maintainer_sets", m.sets, "maintainer_sets",
                           m.sets));
  metrics.push_back(Metric("avg_charts_per_maintainer",
                           m.avg_charts_per_maintainer, "charts", charts,
                           charts, maintainers));
  metrics.push_back(Metric("avg_charts_per_set", m.avg_charts_per_set,
                           "charts", charts, charts, m.sets));
  metrics.push_back(Metric("max_charts_per_set", m.max_charts_per_set,
                           "charts", charts));
  metrics.push_back(Metric("avg_maintainers_per_set",
                           m.avg_maintainers_per_set, "maintainers",
                           maintainers, maintainers, m.sets));
  metrics.push_back(Metric("max_maintainers_per_set",
                           m.max_maintainers_per_set, "maintainers",
                           maintainers));
  metrics.push_back(Metric("unmaintained_charts", m.unmaintained_charts,
                           "charts", charts));

  Json identities = Json::array();
  for (const auto& [key, id] : result.identities) {
    identities.push_back(Json{{"key", key},
                              {"names_seen", id.names_seen},
                              {"emails_seen", id.emails_seen}});
  }
  Json sets = Json::array();
  for (const auto& s : result.sets) {
    Json stems = Json::array();
    for (const auto& st : s.stems) stems.push_back(st.value());
    sets.push_back(Json{{"members", s.members},
                        {"size", s.size()},
                        {"charts", Charts(s.charts)},
                        {"stems", stems}});
  }
  return Json{{"identity_mode", IdentityModeName(mode)},
              {"metrics", metrics},
              {"identities", identities},
              {"sets", sets},
              {"unmaintained", Charts(result.empty_bucket)}};
}

Json ToJson(const ChangeSet& changes) {
  Json vupdates = Json::array();
  for (const auto& [from, to] : changes.vupdates) {
    vupdates.push_back(Json{{"removed", ToJson(from)}, {"added", ToJson(to)}});
  }
  return Json{{"from_id", changes.from_id},
              {"to_id", changes.to_id},
              {"added", Charts(changes.added)},
              {"removed", Charts(changes.removed)},
              {"updated", Charts(changes.updated)},
              {"vupdates", vupdates}};
}

Json ToJson(const std::vector<ActivityProfile>& profiles) {
  Json list = Json::array();
  for (const auto& p : profiles) {
    list.push_back(Json{{"stem", p.stem.value()},
                        {"days_observed", p.days_observed},
                        {"days_changed", p.days_changed},
                        {"dcr", p.dcr},
                        {"level", ActivityLevelName(p.level)}});
  }
  Json clusters = Json::array();
  for (const auto& c : SummarizeActivity(profiles)) {
    clusters.push_back(Json{
        {"level", ActivityLevelName(c.level)},
        {"condition", c.level == ActivityLevel::kRegularlyChanged ? "dcr > 50"
                      : c.level == ActivityLevel::kInfrequentlyChanged
                          ? "0 < dcr <= 50"
                          : "dcr == 0"},
        {"mean_dcr", c.mean_dcr},
        {"charts",
         Metric("charts", c.charts, "charts",
                static_cast<double>(profiles.size()))}});
  }
  return Json{{"profiles", list}, {"clusters", clusters}};
}

Json ToJson(const SnapshotSummary& summary) {
  Json metrics = Json::array();
  for (const auto& [name, value] : summary.Metrics()) {
    metrics.push_back(Metric(name, value, name));
  }
  Json out{{"id", summary.id},
           {"charts", summary.charts},
           {"unique_charts", summary.stems},
           {"versioning_overhead",
            Metric("versioning_overhead", summary.versioning_overhead,
                   "unique_charts", std::nullopt,
                   summary.charts - summary.stems, summary.stems)},
           {"metrics", metrics}};
  if (summary.templates) {
    const TemplateMetrics& t = *summary.templates;
    out["templates"] = Json{
        {"charts", t.charts},
        {"variable_charts",
         Metric("variable_charts", t.variable_charts, "charts", t.charts)},
        {"variables", t.variables},
        {"duplicate_charts",
         Metric("duplicate_charts", t.duplicate_charts, "charts", t.charts)},
        {"duplicate_groups", t.duplicate_groups},
        {"duplicate_values", t.duplicate_values},
        {"unrenderable_charts", Metric("unrenderable_charts",
                                       t.unrenderable_charts, "charts",
                                       t.charts)}};
  }
  return out;
}

Json ToJson(const TrendTable& table) {
  Json periods = Json::array();
  for (const auto& p : table.periods) {
    Json deltas = Json::array();
    for (const auto& d : p.deltas) {
      deltas.push_back(Json{{"name", d.name},
                            {"start", d.start},
                            {"end", d.end},
                            {"monthly_change_pct",
                             OptionalNumber(d.monthly_change)}});
    }
    periods.push_back(Json{
        {"name", p.spec.name},
        {"from_id", p.start.id},
        {"to_id", p.end.id},
        {"days", p.days},
        {"months", p.months},
        {"chart_growth_pct",
         Metric("chart_growth_pct", p.chart_growth, "charts", std::nullopt,
                p.end.charts, p.start.charts)},
        {"unique_chart_growth_pct",
         Metric("unique_chart_growth_pct", p.stem_growth, "unique_charts",
                std::nullopt, p.end.stems, p.start.stems)},
        {"changed_charts_pct",
         Metric("changed_charts_pct", p.changed_pct, "charts", std::nullopt,
                p.changed_charts, p.start_charts)},
        {"start", ToJson(p.start)},
        {"end", ToJson(p.end)},
        {"deltas", deltas}});
  }
  Json avg_deltas = Json::array();
  for (const auto& d : table.avg_deltas) {
    avg_deltas.push_back(Json{{"name", d.name},
                              {"monthly_change_pct",
                               OptionalNumber(d.monthly_change)}});
  }
  return Json{{"normalisation",
               "growth: geometric monthly rate; changed charts: period share "
               "divided by months; average: arithmetic mean of periods"},
              {"periods", periods},
              {"average",
               Json{{"chart_growth_pct", table.avg_chart_growth},
                    {"unique_chart_growth_pct", table.avg_stem_growth},
                    {"changed_charts_pct", table.avg_changed_pct},
                    {"deltas", avg_deltas}}}};
}

Json ToJson(const RewritePlan& plan) {
  Json assignments = Json::array();
  for (const auto& a : plan.assignments) {
    Json targets = Json::array();
    for (const auto& t : a.targets) {
      targets.push_back(Json{{"template_path", t.template_path},
                             {"begin", t.begin},
                             {"end", t.end},
                             {"key_path", t.key_path},
                             {"quoted", t.quoted}});
    }
    assignments.push_back(Json{{"var_name", a.var_name},
                               {"value", a.value},
                               {"targets", targets}});
  }
  return Json{{"chart", ToJson(plan.chart)},
              {"assignments", assignments},
              {"values_patch", plan.values_patch},
              {"warnings", plan.warnings}};
}

Json ToJson(const DigestBundle& bundle) {
  Json digests = Json::array();
  auto issues_of = [](const IssueDigest& d) {
    Json list = Json::array();
    for (const auto& i : d.issues) {
      Json j{{"chart", ToJson(i.chart)},
             {"kind", IssueKindName(i.kind)},
             {"detail", i.detail}};
      if (i.diff_link) j["diff_link"] = *i.diff_link;
      list.push_back(j);
    }
    return list;
  };
  for (const auto& d : bundle.digests) {
    digests.push_back(
        Json{{"recipient_email", d.recipient_email}, {"issues", issues_of(d)}});
  }
  const double recipients = bundle.digests.size();
  return Json{
      {"recipients", bundle.digests.size()},
      {"unique_issues", bundle.unique_issues},
      {"deliveries", bundle.deliveries},
      {"avg_issues_per_recipient",
       Metric("avg_issues_per_recipient", bundle.avg_issues_per_recipient,
              "recipients", std::nullopt, bundle.unique_issues, recipients)},
      {"digests", digests},
      {"unaddressable", issues_of(bundle.unaddressable)}};
}

Json ToJson(const StatisticsInput& stats) {
  return Json{{"test", "wilcoxon_signed_rank_resampled"},
              {"n1", stats.n1.size()},
              {"n2", stats.n2.size()},
              {"median_n1", Median(stats.n1)},
              {"median_n2", Median(stats.n2)},
              {"iterations", stats.result.iterations},
              {"tests_run", stats.result.tests_run},
              {"all_zero_skipped", stats.result.all_zero_skipped},
              {"seed", stats.result.seed},
              {"prng", stats.result.prng},
              {"min_p", stats.result.min_p}};
}

Json QualitySummary(const std::vector<QualityReport>& reports) {
  const TemplateMetrics t = SummarizeTemplates(reports);
  int max_dup = 0;
  double sum_max = 0;
  int charts_with_max = 0;
  for (const auto& r : reports) {
    if (r.duplicate.groups.empty()) continue;
    const int m = r.duplicate.groups.front().count;
    max_dup = std::max(max_dup, m);
    sum_max += m;
    ++charts_with_max;
  }
  Json metrics = Json::array();
  const double charts = t.charts;
  metrics.push_back(Metric("charts", charts, "charts", charts));
  metrics.push_back(Metric("variable_charts", t.variable_charts, "charts",
                           charts));
  metrics.push_back(Metric("variables", t.variables, "charts", std::nullopt));
  metrics.push_back(Metric("variables_per_variable_chart",
                           t.variable_intensity(), "variable_charts",
                           std::nullopt, t.variables, t.variable_charts));
  metrics.push_back(Metric("duplicate_charts", t.duplicate_charts, "charts",
                           charts));
  metrics.push_back(Metric("duplicate_groups", t.duplicate_groups, "charts",
                           std::nullopt));
  metrics.push_back(Metric("duplicate_groups_per_chart",
                           charts ? t.duplicate_groups / charts : 0.0,
                           "charts", std::nullopt, t.duplicate_groups,
                           charts));
  metrics.push_back(Metric("duplicate_values", t.duplicate_values, "charts",
                           std::nullopt));
  metrics.push_back(Metric("duplicate_values_per_group",
                           t.duplicate_groups
                               ? static_cast<double>(t.duplicate_values) /
                                     t.duplicate_groups
                               : 0.0,
                           "duplicate_groups", std::nullopt,
                           t.duplicate_values, t.duplicate_groups));
  metrics.push_back(Metric("duplicate_values_per_chart",
                           charts ? t.duplicate_values / charts : 0.0,
                           "charts", std::nullopt, t.duplicate_values,
                           charts));
  metrics.push_back(Metric("max_duplicate_count", max_dup, "charts",
                           std::nullopt));
  metrics.push_back(Metric("avg_max_duplicate_count_per_chart",
                           charts_with_max ? sum_max / charts_with_max : 0.0,
                           "duplicate_charts", std::nullopt, sum_max,
                           charts_with_max));
  metrics.push_back(Metric("unrenderable_charts", t.unrenderable_charts,
                           "charts", charts));
  return metrics;
}

Json Report::ToJson() const {
  return Json{{"schema_version", kReportSchemaVersion},
              {"generated_at", FormatTimestamp(generated_at_)},
              {"subject", subject_},
              {"sections", sections_}};
}

}  // namespace chartqa
