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

#include <CLI11.hpp>

#include <iostream>

#include "chartqa/core/error.h"
#include "chartqa/core/log.h"
#include "chartqa/ecosystem/maintainers.h"
#include "chartqa/report/livecheck.h"
#include "commands.h"

namespace {

using chartqa::cli::Options;

void AddSource(CLI::App* app, Options& o) {
  app->add_option("--path", o.source.path, "Directory of chart archives");
  app->add_option("--index", o.source.index, "Repository index URL or file");
  app->add_option("--snapshot-store", o.source.store, "Snapshot store root");
  app->add_option("--snapshot", o.source.snapshot,
                  "Snapshot id (default: latest)");
}

void AddAnalysis(CLI::App* app, Options& o) {
  app->add_option("--threshold", o.cli.threshold, "Duplicate threshold");
  app->add_option_function<std::string>(
      "--blacklist",
      [&o](const std::string& v) { o.cli.blacklist = chartqa::ParseBlacklist(v); },
      "Comma separated values never reported as duplicates");
  app->add_option("--engine", o.cli.engine, "builtin or external");
  app->add_option("--renderer-bin", o.cli.renderer_bin,
                  "Renderer binary for the external engine");
  app->add_option("--kb", o.cli.knowledge_base, "Knowledge base file");
}

void AddCommon(CLI::App* app, Options& o) {
  app->add_option("--out", o.out, "Output directory");
  app->add_option("--format", o.format, "json, csv or dot")
      ->check(CLI::IsMember({"json", "csv", "dot"}));
  app->add_option("--config", o.config_file, "Configuration file");
  app->add_option("--jobs", o.cli.jobs, "Worker threads");
  app->add_option_function<std::string>(
      "--identity-mode",
      [&o](const std::string& v) {
        const auto mode = chartqa::ParseIdentityMode(v);
        if (!mode) throw CLI::ValidationError("--identity-mode", "email or name-email");
        o.cli.identity_mode = *mode;
      },
      "email or name-email");
  app->add_flag("-v,--verbose", o.verbose, "Verbose diagnostics");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chartqa: quality analysis for chart repositories"};
  app.require_subcommand(1);
  Options o;
  int (*run)(const Options&) = nullptr;

  auto sub = [&](const char* name, const char* help,
                 int (*fn)(const Options&)) {
    CLI::App* s = app.add_subcommand(name, help);
    AddCommon(s, o);
    s->callback([&run, fn] { run = fn; });
    return s;
  };

  CLI::App* snapshot = sub("snapshot", "Record a repository snapshot",
                           chartqa::cli::RunSnapshot);
  AddSource(snapshot, o);
  snapshot->add_option("--date", o.date, "Snapshot time (YYYY-MM-DD)");

  for (auto [name, help, fn] :
       {std::tuple{"analyze", "Variability, duplicates and irregularities",
                   chartqa::cli::RunAnalyze},
        std::tuple{"dupes", "Duplicate value groups", chartqa::cli::RunDupes},
        std::tuple{"variability", "Learn variable values",
                   chartqa::cli::RunVariability},
        std::tuple{"suggest", "Rewrite suggestions and issue digests",
                   chartqa::cli::RunSuggest}}) {
    CLI::App* s = sub(name, help, fn);
    AddSource(s, o);
    AddAnalysis(s, o);
    if (std::string(name) == "suggest") {
      s->add_option("--base-url", o.cli.base_url, "Base URL for diff links");
    }
  }

  for (auto [name, help, fn] :
       {std::tuple{"authorsets", "Maintainer sets", chartqa::cli::RunAuthorsets},
        std::tuple{"irregularities", "Metadata irregularities",
                   chartqa::cli::RunIrregularities},
        std::tuple{"graph", "Maintainer graph in DOT",
                   chartqa::cli::RunGraph}}) {
    AddSource(sub(name, help, fn), o);
  }

  CLI::App* changes =
      sub("changes", "Changes between two snapshots", chartqa::cli::RunChanges);
  AddSource(changes, o);
  changes->add_option("--from", o.from, "Earlier snapshot id");
  changes->add_option("--to", o.to, "Later snapshot id");

  CLI::App* trends =
      sub("trends", "Evolution over snapshot periods", chartqa::cli::RunTrends);
  AddSource(trends, o);
  AddAnalysis(trends, o);
  trends->add_option("--period", o.periods, "name:from:to[:months]");
  trends->add_flag("--with-templates", o.with_templates,
                   "Include template metrics");

  CLI::App* stats =
      sub("stats", "Resampled Wilcoxon group test", chartqa::cli::RunStats);
  AddSource(stats, o);
  stats->add_option("--threshold", o.cli.threshold, "Duplicate threshold");
  stats->add_option("--n1", o.n1_file, "Values of group N1");
  stats->add_option("--n2", o.n2_file, "Values of group N2");
  stats->add_option("--notified", o.notified, "Snapshot at notification");
  stats->add_option("--observed-end", o.observed_end,
                    "Last snapshot of the observation");
  stats->add_option("--final", o.final_snapshot, "Snapshot to measure");
  stats->add_option("--iterations", o.cli.iterations, "Resampling iterations");
  stats->add_option("--seed", o.cli.seed, "PRNG seed");

  CLI::App* live = sub("livecheck", "Check one chart directory",
                       chartqa::cli::RunLivecheckCommand);
  live->add_option("--path", o.source.path, "Chart directory")->required();
  AddAnalysis(live, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : chartqa::kExitOperational;
  }
  chartqa::SetLogLevel(o.verbose ? chartqa::LogLevel::kInfo
                                 : chartqa::LogLevel::kWarning);
  try {
    return run(o);
  } catch (const chartqa::Error& e) {
    chartqa::LogError(e.what());
  } catch (const std::exception& e) {
    chartqa::LogError(std::string("internal error: ") + e.what());
  }
  return chartqa::kExitOperational;
}
