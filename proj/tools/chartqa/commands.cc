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

#include "commands.h"

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "chartqa/analysis/quality.h"
#include "chartqa/analysis/variability.h"
#include "chartqa/core/error.h"
#include "chartqa/core/file_util.h"
#include "chartqa/core/log.h"
#include "chartqa/core/stem.h"
#include "chartqa/ecosystem/activity.h"
#include "chartqa/ecosystem/changes.h"
#include "chartqa/ecosystem/irregularities.h"
#include "chartqa/ecosystem/maintainers.h"
#include "chartqa/ecosystem/resampling.h"
#include "chartqa/ecosystem/trends.h"
#include "chartqa/ingest/snapshot.h"
#include "chartqa/report/distributions.h"
#include "chartqa/report/dot.h"
#include "chartqa/report/json_report.h"
#include "chartqa/report/livecheck.h"
#include "chartqa/suggest/issue_digest.h"
#include "chartqa/suggest/rewrite.h"

namespace chartqa::cli {
namespace fs = std::filesystem;
namespace {

RunConfig Resolve(const Options& o) {
  ConfigLayer file;
  if (!o.config_file.empty()) file = LoadConfigFile(o.config_file);
  return ResolveConfig(o.cli, file, ConfigFromEnvironment());
}

void RequireFormat(const Options& o, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (o.format == f) return;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "format " + o.format + " is not available for this command");
}

// Writes to --out/<file> when --out is set, else to standard output.
void Emit(const Options& o, const std::string& file, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::error_code ec;
  const fs::path p = fs::path(o.out) / file;
  fs::create_directories(p.parent_path(), ec);
  WriteFile(p, text);
  LogInfo("wrote " + p.string());
}

void WriteArtifact(const Options& o, const std::string& file,
                   const std::string& text) {
  if (!o.out.empty()) Emit(o, file, text);
}

Json CorpusSection(const Corpus& c) {
  std::set<StemName> stems;
  for (const auto& e : c.index.entries) stems.insert(e.chart.stem);
  Json failures = Json::array();
  for (const auto& [where, why] : c.failures) {
    failures.push_back(Json{{"location", where}, {"reason", why}});
  }
  Json out{{"charts", c.index.entries.size()},
           {"unique_charts", stems.size()},
           {"packages", c.packages.size()},
           {"parse_failures", failures}};
  if (!c.index.entries.empty()) {
    std::vector<ChartRef> refs;
    for (const auto& e : c.index.entries) refs.push_back(e.chart);
    out["versioning_overhead"] =
        Metric("versioning_overhead", VersioningOverhead(refs),
               "unique_charts", std::nullopt,
               static_cast<double>(refs.size() - stems.size()),
               static_cast<double>(stems.size()));
  }
  return out;
}

VariabilityKnowledgeBase LoadKb(const RunConfig& cfg) {
  if (cfg.knowledge_base.empty()) return {};
  return VariabilityKnowledgeBase::Load(cfg.knowledge_base);
}

std::vector<QualityReport> AnalyzeAll(const std::vector<ChartPackage>& packages,
                                      const VariabilityKnowledgeBase& kb,
                                      const RunConfig& cfg, Renderer& engine) {
  std::vector<QualityReport> reports(packages.size());
  ParallelFor(packages.size(), cfg.jobs, [&](std::size_t i) {
    reports[i] = AnalyzeChart(packages[i], kb, cfg.duplicates, engine);
  });
  std::sort(reports.begin(), reports.end(),
            [](const QualityReport& a, const QualityReport& b) {
              return a.chart < b.chart;
            });
  return reports;
}

std::vector<double> ReadNumbers(const std::string& path) {
  std::string text = ReadFile(path);
  std::replace(text.begin(), text.end(), ',', ' ');
  std::istringstream in(text);
  std::vector<double> out;
  std::string token;
  while (in >> token) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kInvalidArgument,
                  path + ": not a number: " + token);
    }
  }
  return out;
}

std::pair<std::string, std::string> DefaultPair(const SnapshotStore& store,
                                                 const Options& o) {
  const auto ids = store.List();
  if (ids.size() < 2 && (o.from.empty() || o.to.empty())) {
    throw Error(ErrorCode::kInvalidArgument,
                "need two snapshots (or --from/--to)");
  }
  return {o.from.empty() ? ids[ids.size() - 2] : o.from,
          o.to.empty() ? ids.back() : o.to};
}

}  // namespace

int RunSnapshot(const Options& o) {
  if (o.source.index.empty() || o.source.store.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "snapshot needs --index and --snapshot-store");
  }
  const RunConfig cfg = Resolve(o);
  const Timestamp at = o.date.empty() ? NowUtc() : ParseTimestamp(o.date);
  SnapshotStore store(o.source.store);
  const std::string id = TakeSnapshot(o.source.index, store, cfg.jobs, at);
  std::cout << id << "\n";
  return 0;
}

int RunAnalyze(const Options& o) {
  RequireFormat(o, {"json", "csv"});
  const RunConfig cfg = Resolve(o);
  SourceOptions src = o.source;
  src.jobs = cfg.jobs;
  const Corpus corpus = LoadCorpus(src, true);
  const auto engine = MakeRenderer(cfg);
  const auto reports = AnalyzeAll(corpus.packages, LoadKb(cfg), cfg, *engine);
  const IrregularityReport irr = DetectIrregularities(corpus.index);

  Report report(corpus.subject);
  report.Set("corpus", CorpusSection(corpus));
  Json quality = Json::array();
  bool findings = irr.total() > 0;
  for (const auto& r : reports) {
    quality.push_back(ToJson(r));
    findings = findings || r.has_duplicates();
  }
  report.Set("quality", quality);
  report.Set("quality_summary", QualitySummary(reports));
  report.Set("irregularities", ToJson(irr));
  const std::string histogram = ToCsv(VariableDuplicateHistogram(reports));
  if (o.format == "csv") {
    Emit(o, "variable_duplicate_histogram.csv", histogram);
    WriteArtifact(o, "report.json", report.Dump());
  } else {
    Emit(o, "report.json", report.Dump());
    WriteArtifact(o, "variable_duplicate_histogram.csv", histogram);
  }
  return findings ? 1 : 0;
}

int RunDupes(const Options& o) {
  RequireFormat(o, {"json", "csv"});
  const RunConfig cfg = Resolve(o);
  SourceOptions src = o.source;
  src.jobs = cfg.jobs;
  const Corpus corpus = LoadCorpus(src, true);
  std::vector<DuplicateReport> reports(corpus.packages.size());
  ParallelFor(reports.size(), cfg.jobs, [&](std::size_t i) {
    reports[i] = DetectDuplicates(corpus.packages[i], cfg.duplicates);
  });
  std::sort(reports.begin(), reports.end(),
            [](const auto& a, const auto& b) { return a.chart < b.chart; });
  bool findings = false;
  Json list = Json::array();
  Table table{{"chart", "version", "value", "count"}, {}};
  for (const auto& r : reports) {
    findings = findings || !r.empty();
    list.push_back(ToJson(r));
    for (const auto& g : r.groups) {
      table.rows.push_back({r.chart.name, r.chart.version, g.canonical_value,
                            std::to_string(g.count)});
    }
  }
  if (o.format == "csv") {
    Emit(o, "duplicates.csv", ToCsv(table));
  } else {
    Report report(corpus.subject);
    report.Set("duplicates", list);
    Emit(o, "report.json", report.Dump());
  }
  return findings ? 1 : 0;
}

int RunVariability(const Options& o) {
  RequireFormat(o, {"json"});
  const RunConfig cfg = Resolve(o);
  SourceOptions src = o.source;
  src.jobs = cfg.jobs;
  Corpus corpus = LoadCorpus(src, true);
  std::sort(corpus.packages.begin(), corpus.packages.end(),
            [](const auto& a, const auto& b) { return a.ref() < b.ref(); });
  const auto engine = MakeRenderer(cfg);
  Json learned = Json::array();
  auto learn = [&](VariabilityKnowledgeBase& kb) {
    for (const auto& pkg : corpus.packages) {
      Json entry{{"chart", ToJson(pkg.ref())}};
      try {
        const LearnResult r = LearnVariability(pkg, kb, *engine);
        entry["new_paths"] = r.new_paths;
        Json failures = Json::array();
        for (const auto& f : r.failures) failures.push_back(ToJson(f));
        entry["render_failures"] = failures;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kRenderFailed) throw;
        entry["new_paths"] = Json::array();
        entry["error"] = e.what();
      }
      entry["variable_value_count"] = kb.CountFor(pkg.ref().stem);
      learned.push_back(entry);
    }
  };
  std::size_t kb_size = 0;
  if (cfg.knowledge_base.empty()) {
    VariabilityKnowledgeBase kb;
    learn(kb);
    kb_size = kb.size();
  } else {
    UpdateKnowledgeBaseFile(cfg.knowledge_base,
                            [&](VariabilityKnowledgeBase& kb) {
                              learn(kb);
                              kb_size = kb.size();
                            });
  }
  Report report(corpus.subject);
  report.Set("variability",
             Json{{"knowledge_base", cfg.knowledge_base},
                  {"entries", kb_size},
                  {"charts", learned}});
  Emit(o, "report.json", report.Dump());
  return 0;
}

int RunSuggest(const Options& o) {
  RequireFormat(o, {"json"});
  const RunConfig cfg = Resolve(o);
  SourceOptions src = o.source;
  src.jobs = cfg.jobs;
  Corpus corpus = LoadCorpus(src, true);
  std::sort(corpus.packages.begin(), corpus.packages.end(),
            [](const auto& a, const auto& b) { return a.ref() < b.ref(); });
  const auto engine = MakeRenderer(cfg);
  const VariabilityKnowledgeBase kb = LoadKb(cfg);

  struct Outcome {
    DuplicateReport report;
    std::optional<RewritePlan> plan;
    bool verified = false;
    std::string diff;
    std::string note;
  };
  std::vector<Outcome> outcomes(corpus.packages.size());
  ParallelFor(outcomes.size(), cfg.jobs, [&](std::size_t i) {
    const ChartPackage& pkg = corpus.packages[i];
    Outcome& out = outcomes[i];
    out.report = DetectDuplicates(pkg, cfg.duplicates);
    if (out.report.empty()) return;
    try {
      out.plan = PlanRewrite(pkg, out.report);
    } catch (const Error& e) {
      out.note = e.what();
      return;
    }
    if (out.plan->empty()) return;
    out.verified = VerifyRewrite(pkg, *out.plan, kb, *engine);
    if (out.verified) {
      out.diff = EmitDiff(pkg, *out.plan);
    } else {
      out.note = "rewrite failed verification; diff suppressed";
    }
  });

  std::set<std::string> linked;
  std::vector<DuplicateReport> reports;
  Json plans = Json::array();
  for (const auto& out : outcomes) {
    if (out.report.empty()) continue;
    reports.push_back(out.report);
    Json j{{"chart", ToJson(out.report.chart)}, {"verified", out.verified}};
    if (out.plan) j["plan"] = ToJson(*out.plan);
    if (!out.note.empty()) j["note"] = out.note;
    if (out.verified) {
      const std::string file = DiffFileName(out.report.chart);
      j["diff_file"] = "diffs/" + file;
      linked.insert(out.report.chart.name + "-" + out.report.chart.version);
      WriteArtifact(o, "diffs/" + file, out.diff);
    }
    plans.push_back(j);
  }
  const IrregularityReport irr = DetectIrregularities(corpus.index);
  const DigestBundle bundle =
      BuildIssueDigests(corpus.index, irr, reports, cfg.base_url, &linked);
  if (!o.out.empty()) WriteOutbox(bundle, fs::path(o.out) / "outbox");

  Report report(corpus.subject);
  report.Set("suggestions", Json{{"base_url", cfg.base_url},
                                 {"plans", plans},
                                 {"digests", ToJson(bundle)}});
  report.Set("irregularities", ToJson(irr));
  Emit(o, "report.json", report.Dump());
  WriteArtifact(o, "issues_histogram.csv", ToCsv(IssueHistogram(bundle)));
  return reports.empty() && irr.total() == 0 ? 0 : 1;
}

int RunAuthorsets(const Options& o) {
  RequireFormat(o, {"json", "csv", "dot"});
  const RunConfig cfg = Resolve(o);
  const Corpus corpus = LoadCorpus(o.source, false);
  const MaintainerSetResult sets =
      ComputeMaintainerSets(corpus.index, cfg.identity_mode);
  const IrregularityReport irr = DetectIrregularities(corpus.index);
  Report report(corpus.subject);
  report.Set("maintainers", ToJson(sets, cfg.identity_mode));
  report.Set("irregularities", ToJson(irr));
  const std::string heatmap = ToCsv(MaintainerHeatmap(sets));
  const std::string cells = ToCsv(MaintainerHeatmapCells(sets));
  const std::string dot = EmitDot(sets, irr);
  if (o.format == "csv") {
    Emit(o, "maintainer_heatmap.csv", heatmap);
  } else if (o.format == "dot") {
    Emit(o, "maintainers.dot", dot);
  } else {
    Emit(o, "report.json", report.Dump());
  }
  if (o.format != "json") WriteArtifact(o, "report.json", report.Dump());
  if (o.format != "csv") WriteArtifact(o, "maintainer_heatmap.csv", heatmap);
  if (o.format != "dot") WriteArtifact(o, "maintainers.dot", dot);
  WriteArtifact(o, "maintainer_heatmap_cells.csv", cells);
  return 0;
}

int RunIrregularities(const Options& o) {
  RequireFormat(o, {"json", "csv"});
  const Corpus corpus = LoadCorpus(o.source, false);
  const IrregularityReport irr = DetectIrregularities(corpus.index);
  if (o.format == "csv") {
    Table t{{"kind", "subject", "detail"}, {}};
    for (const auto& c : irr.no_maintainer) {
      t.rows.push_back({"no_maintainer", c.file_name, ""});
    }
    for (const auto& c : irr.name_collision) {
      t.rows.push_back({"name_collision", c.file_name, c.name});
    }
    for (const auto& s : irr.multiple_versions) {
      t.rows.push_back({"multiple_versions", s.value(), ""});
    }
    for (const auto& a : irr.alias_names) {
      std::string names;
      for (const auto& n : a.names) names += (names.empty() ? "" : ";") + n;
      t.rows.push_back({"alias_names", a.email, names});
    }
    Emit(o, "irregularities.csv", ToCsv(t));
  } else {
    Report report(corpus.subject);
    report.Set("irregularities", ToJson(irr));
    Emit(o, "report.json", report.Dump());
  }
  return irr.total() > 0 ? 1 : 0;
}

int RunChanges(const Options& o) {
  RequireFormat(o, {"json"});
  if (o.source.store.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "changes needs --snapshot-store");
  }
  SnapshotStore store(o.source.store);
  const auto [from, to] = DefaultPair(store, o);
  const ChangeSet cs =
      DetectChanges(store.Load(from, false), store.Load(to, false));
  Report report(o.source.store);
  report.Set("changes", ToJson(cs));
  Emit(o, "report.json", report.Dump());
  return 0;
}

int RunTrends(const Options& o) {
  RequireFormat(o, {"json", "csv"});
  if (o.source.store.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "trends needs --snapshot-store");
  }
  const RunConfig cfg = Resolve(o);
  SnapshotStore store(o.source.store);
  const auto ids = store.List();
  if (ids.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument, "trends needs two snapshots");
  }
  std::vector<PeriodSpec> periods;
  for (const auto& text : o.periods) {
    auto spec = ParsePeriodSpec(text);
    if (!spec) {
      throw Error(ErrorCode::kInvalidArgument, "bad --period " + text);
    }
    periods.push_back(*spec);
  }
  if (periods.empty()) periods.push_back({"all", ids.front(), ids.back(), {}});

  std::vector<Snapshot> snapshots;
  for (const auto& id : ids) snapshots.push_back(store.Load(id, false));

  std::map<std::string, std::vector<QualityReport>> quality;
  if (o.with_templates) {
    const auto engine = MakeRenderer(cfg);
    std::set<std::string> wanted;
    for (const auto& p : periods) {
      std::string first, last;
      for (const auto& id : ids) {
        if (id < p.from_id || id > p.to_id) continue;
        if (first.empty()) first = id;
        last = id;
      }
      if (!first.empty()) wanted.insert({first, last});
    }
    const VariabilityKnowledgeBase kb = LoadKb(cfg);
    for (const auto& id : wanted) {
      const Snapshot full = store.Load(id, true);
      std::vector<ChartPackage> packages;
      for (const auto& [name, pkg] : full.packages) packages.push_back(pkg);
      quality[id] = AnalyzeAll(packages, kb, cfg, *engine);
    }
  }
  const TrendTable table = ComputeTrends(snapshots, periods, cfg.identity_mode,
                                         o.with_templates ? &quality : nullptr);

  Json activity = Json::array();
  for (const auto& p : periods) {
    std::vector<Snapshot> in;
    for (const auto& s : snapshots) {
      if (s.id >= p.from_id && s.id <= p.to_id) in.push_back(s);
    }
    if (in.size() < 2) continue;
    activity.push_back(Json{{"period", p.name},
                            {"activity", ToJson(ClassifyActivity(
                                             BuildHistories(in)))}});
  }

  Table csv{{"metric"}, {}};
  for (const auto& p : table.periods) csv.header.push_back(p.spec.name);
  csv.header.push_back("average");
  auto add_row = [&](const std::string& name, auto getter, double avg) {
    std::vector<std::string> row{name};
    for (const auto& p : table.periods) row.push_back(FormatNumber(getter(p)));
    row.push_back(FormatNumber(avg));
    csv.rows.push_back(row);
  };
  add_row("charts_growth_pct", [](const PeriodMetrics& p) { return p.chart_growth; },
          table.avg_chart_growth);
  add_row("unique_charts_growth_pct",
          [](const PeriodMetrics& p) { return p.stem_growth; },
          table.avg_stem_growth);
  add_row("changed_charts_pct",
          [](const PeriodMetrics& p) { return p.changed_pct; },
          table.avg_changed_pct);
  for (std::size_t i = 0; i < table.avg_deltas.size(); ++i) {
    std::vector<std::string> row{table.avg_deltas[i].name + "_change_pct"};
    for (const auto& p : table.periods) {
      row.push_back(i < p.deltas.size() && p.deltas[i].monthly_change
                        ? FormatNumber(*p.deltas[i].monthly_change)
                        : "");
    }
    row.push_back(table.avg_deltas[i].monthly_change
                      ? FormatNumber(*table.avg_deltas[i].monthly_change)
                      : "");
    csv.rows.push_back(row);
  }

  Report report(o.source.store);
  report.Set("trends", ToJson(table));
  report.Set("activity", activity);
  if (o.format == "csv") {
    Emit(o, "trends.csv", ToCsv(csv));
    WriteArtifact(o, "report.json", report.Dump());
  } else {
    Emit(o, "report.json", report.Dump());
    WriteArtifact(o, "trends.csv", ToCsv(csv));
  }
  return 0;
}

int RunStats(const Options& o) {
  RequireFormat(o, {"json"});
  const RunConfig cfg = Resolve(o);
  StatisticsInput stats;
  Json groups;
  std::string subject;
  if (!o.n1_file.empty() || !o.n2_file.empty()) {
    if (o.n1_file.empty() || o.n2_file.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "give both --n1 and --n2");
    }
    stats.n1 = ReadNumbers(o.n1_file);
    stats.n2 = ReadNumbers(o.n2_file);
    subject = o.n1_file + " vs " + o.n2_file;
  } else {
    if (o.source.store.empty() || o.notified.empty() ||
        o.observed_end.empty() || o.final_snapshot.empty()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "stats needs --n1/--n2 or --snapshot-store with --notified, "
                  "--observed-end and --final");
    }
    SnapshotStore store(o.source.store);
    const NotificationGroups g = BuildNotificationGroups(
        store.Load(o.notified, false), store.Load(o.observed_end, false),
        store.Load(o.final_snapshot, true), cfg.duplicates);
    stats.n1 = g.n1;
    stats.n2 = g.n2;
    Json n1 = Json::array(), n2 = Json::array();
    for (const auto& s : g.n1_stems) n1.push_back(s.value());
    for (const auto& s : g.n2_stems) n2.push_back(s.value());
    groups = Json{{"n1_stems", n1}, {"n2_stems", n2}};
    subject = o.source.store;
  }
  const std::uint64_t seed = cfg.seed ? *cfg.seed : std::random_device{}();
  stats.result = ResampledGroupTest(stats.n1, stats.n2, cfg.iterations, seed,
                                    static_cast<unsigned>(cfg.jobs));
  Json section = ToJson(stats);
  if (!groups.is_null()) section["groups"] = groups;
  Report report(subject);
  report.Set("statistics", section);
  Emit(o, "report.json", report.Dump());
  return 0;
}

int RunGraph(const Options& o) {
  RequireFormat(o, {"json", "dot"});
  const RunConfig cfg = Resolve(o);
  const Corpus corpus = LoadCorpus(o.source, false);
  const MaintainerSetResult sets =
      ComputeMaintainerSets(corpus.index, cfg.identity_mode);
  Emit(o, "maintainers.dot", EmitDot(sets, DetectIrregularities(corpus.index)));
  return 0;
}

int RunLivecheckCommand(const Options& o) {
  RequireFormat(o, {"json"});
  if (o.source.path.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "livecheck needs --path");
  }
  const RunConfig cfg = Resolve(o);
  const LivecheckResult r = RunLivecheck(o.source.path, cfg.duplicates);
  if (!r.error.empty()) LogError(r.error);
  std::cout << r.payload.dump(2) << "\n";
  WriteArtifact(o, "report.json", r.payload.dump(2) + "\n");
  return r.exit_code;
}

}  // namespace chartqa::cli
