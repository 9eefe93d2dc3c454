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

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "chartqa/analysis/duplicates.h"
#include "chartqa/analysis/knowledge_base.h"
#include "chartqa/core/chart_parse.h"
#include "chartqa/core/error.h"
#include "chartqa/core/file_util.h"
#include "chartqa/ecosystem/irregularities.h"
#include "chartqa/render/builtin_engine.h"
#include "chartqa/render/process.h"
#include "chartqa/suggest/issue_digest.h"
#include "chartqa/suggest/rewrite.h"
#include "chartqa/suggest/unified_diff.h"
#include "../support/fixtures.h"

namespace chartqa {
namespace {

using testing::ChartBuilder;
using testing::TempDir;

std::size_t LcsLength(const std::vector<std::string>& a,
                      const std::vector<std::string>& b) {
  std::vector<std::vector<std::size_t>> t(a.size() + 1,
                                          std::vector<std::size_t>(b.size() + 1));
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      t[i][j] = a[i - 1] == b[j - 1] ? t[i - 1][j - 1] + 1
                                     : std::max(t[i - 1][j], t[i][j - 1]);
    }
  }
  return t[a.size()][b.size()];
}

std::string RandomText(std::mt19937_64& rng) {
  static const char* kLines[] = {"a", "b", "c", "key: value", "", "  - x"};
  std::string out;
  const int n = static_cast<int>(rng() % 9);
  for (int i = 0; i < n; ++i) out += std::string(kLines[rng() % 6]) + "\n";
  if (!out.empty() && rng() % 4 == 0) out.pop_back();
  return out;
}

bool PatchAvailable() { return !FindExecutable("patch").empty(); }

void RunPatch(const std::filesystem::path& dir, const std::string& diff) {
  const auto diff_file = dir / "change.patch";
  testing::WriteText(diff_file, diff);
  const ProcessResult r = RunProcess(
      {"patch", "-s", "-p1", "-d", dir.string(), "-i", diff_file.string()});
  INFO(r.out << r.err);
  REQUIRE(r.exit_code == 0);
}

TEST_CASE("line diff is minimal") {
  std::mt19937_64 rng(4);
  for (int round = 0; round < 500; ++round) {
    const auto a = SplitLines(RandomText(rng));
    const auto b = SplitLines(RandomText(rng));
    const auto edits = DiffLines(a, b);
    std::size_t equal = 0, del = 0, ins = 0;
    for (const auto& e : edits) {
      if (e.op == EditOp::kEqual) {
        CHECK(a[e.a] == b[e.b]);
        ++equal;
      } else if (e.op == EditOp::kDelete) {
        ++del;
      } else {
        ++ins;
      }
    }
    CHECK(equal == LcsLength(a, b));
    CHECK(equal + del == a.size());
    CHECK(equal + ins == b.size());
  }
}

TEST_CASE("unified diff format") {
  CHECK(UnifiedDiff(std::string("x\n"), std::string("x\n"), "a/f", "b/f").empty());
  CHECK(UnifiedDiff(std::string("a\nb\nc\n"), std::string("a\nB\nc\n"), "a/f",
                    "b/f") ==
        "--- a/f\n+++ b/f\n@@ -1,3 +1,3 @@\n a\n-b\n+B\n c\n");
  CHECK(UnifiedDiff(std::nullopt, std::string("new\n"), "a/f", "b/f") ==
        "--- /dev/null\n+++ b/f\n@@ -0,0 +1 @@\n+new\n");
  CHECK(UnifiedDiff(std::string("old\n"), std::nullopt, "a/f", "b/f") ==
        "--- a/f\n+++ /dev/null\n@@ -1 +0,0 @@\n-old\n");
  CHECK(UnifiedDiff(std::string("x"), std::string("x\n"), "a/f", "b/f") ==
        "--- a/f\n+++ b/f\n@@ -1 +1 @@\n-x\n\\ No newline at end of file\n+x\n");
}

TEST_CASE("unified diff round trip") {
  std::mt19937_64 rng(9);
  const bool with_patch = PatchAvailable();
  for (int round = 0; round < 400; ++round) {
    const std::string a = RandomText(rng);
    const std::string b = RandomText(rng);
    const std::string diff = UnifiedDiff(a, b, "a/f", "b/f", rng() % 4);
    std::map<std::string, std::string> files{{"f", a}};
    ApplyUnifiedDiff(files, diff);
    CHECK(files.at("f") == b);
    if (with_patch && round % 20 == 0 && !diff.empty()) {
      TempDir dir;
      testing::WriteText(dir / "f", a);
      RunPatch(dir.path(), diff);
      CHECK(ReadFile(dir / "f") == b);
    }
  }
  std::map<std::string, std::string> files;
  ApplyUnifiedDiff(files, UnifiedDiff(std::nullopt, std::string("n\n"), "a/g", "b/g"));
  CHECK(files.at("g") == "n\n");
  ApplyUnifiedDiff(files, UnifiedDiff(std::string("n\n"), std::nullopt, "a/g", "b/g"));
  CHECK(files.count("g") == 0);
}

TEST_CASE("mismatched context is rejected") {
  std::map<std::string, std::string> files{{"f", "other\n"}};
  const std::string diff = UnifiedDiff(std::string("a\n"), std::string("b\n"), "a/f", "b/f");
  CHECK_THROWS_AS(ApplyUnifiedDiff(files, diff), Error);
  std::map<std::string, std::string> none;
  CHECK_THROWS_AS(ApplyUnifiedDiff(none, diff), Error);
}

ChartBuilder HttpdChart() {
  return ChartBuilder("web", "1.2.3")
      .Maintainer("Ann", "ann@example.com")
      .Values("image: httpd\n")
      .Template("deployment.yaml",
                "apiVersion: apps/v1\n"
                "kind: Deployment\n"
                "metadata:\n"
                "  name: httpd-data\n"
                "spec:\n"
                "  template:\n"
                "    spec:\n"
                "      containers:\n"
                "        - name: httpd-data\n"
                "          image: {{ .Values.image }}\n"
                "          volumeMounts:\n"
                "            - name: httpd-data\n"
                "      volumes:\n"
                "        - name: httpd-data\n"
                "          persistentVolumeClaim:\n"
                "            claimName: httpd-data\n");
}

std::vector<std::size_t> FindAll(const std::string& body, const std::string& needle) {
  std::vector<std::size_t> out;
  for (std::size_t p = body.find(needle); p != std::string::npos;
       p = body.find(needle, p + 1)) {
    out.push_back(p);
  }
  return out;
}

TEST_CASE("rewrite plan for one duplicate group") {
  const ChartPackage pkg = HttpdChart().Package();
  const DuplicateReport report = DetectDuplicates(pkg, DuplicateConfig{});
  REQUIRE(report.groups.size() == 1);
  const RewritePlan plan = PlanRewrite(pkg, report);
  REQUIRE(plan.assignments.size() == 1);
  const RewriteAssignment& a = plan.assignments[0];
  CHECK(a.var_name == "suggestions.var1");
  CHECK(a.Placeholder() == "{{ .Values.suggestions.var1 }}");
  const std::string& body = pkg.files.at("templates/deployment.yaml");
  std::vector<std::size_t> begins;
  for (const auto& t : a.targets) {
    CHECK(t.end - t.begin == std::string("httpd-data").size());
    begins.push_back(t.begin);
  }
  std::sort(begins.begin(), begins.end());
  CHECK(begins == FindAll(body, "httpd-data"));
  CHECK(plan.values_patch == "suggestions:\n  var1: httpd-data\n");

  const ChartPackage rewritten = ApplyRewrite(pkg, plan);
  const std::string& after = rewritten.files.at("templates/deployment.yaml");
  CHECK(FindAll(after, "httpd-data").empty());
  CHECK(FindAll(after, "{{ .Values.suggestions.var1 }}").size() == 5);
  CHECK(rewritten.values.Find("suggestions") != nullptr);

  BuiltinRenderer engine(BuiltinOptions{.seed = 1});
  CHECK(VerifyRewrite(pkg, plan, VariabilityKnowledgeBase{}, engine));
  CHECK(EmitDiff(pkg, plan) == EmitDiff(pkg, PlanRewrite(pkg, report)));
}

TEST_CASE("variables are numbered by descending count") {
  const ChartPackage pkg =
      ChartBuilder("multi", "1.0.0")
          .Template("a.yaml",
                    "k1: thrice\nk2: frequent\nk3: thrice\nk4: frequent\n"
                    "k5: frequent\nk6: thrice\nk7: frequent\n")
          .Package();
  const RewritePlan plan = PlanRewrite(pkg, DetectDuplicates(pkg, DuplicateConfig{}));
  REQUIRE(plan.assignments.size() == 2);
  CHECK(plan.assignments[0].value == "frequent");
  CHECK(plan.assignments[0].targets.size() == 4);
  CHECK(plan.assignments[1].value == "thrice");
  CHECK(plan.assignments[1].var_name == "suggestions.var2");
}

TEST_CASE("rewrite preconditions") {
  const ChartPackage pkg = HttpdChart().Package();
  DuplicateReport empty;
  empty.chart = pkg.ref();
  CHECK_THROWS_AS(PlanRewrite(pkg, empty), Error);
  const ChartPackage taken = HttpdChart().Values("suggestions: {}\n").Package();
  CHECK_THROWS_AS(PlanRewrite(taken, DetectDuplicates(taken, DuplicateConfig{})),
                  Error);
}

TEST_CASE("quoted values keep their quotes") {
  const ChartPackage pkg =
      ChartBuilder("q", "0.1.0")
          .Template("cm.yaml",
                    "data:\n  a: \"8080\"\n  b: \"8080\"\n  c: \"8080\"\n")
          .Package();
  const RewritePlan plan = PlanRewrite(pkg, DetectDuplicates(pkg, DuplicateConfig{}));
  REQUIRE(plan.assignments.size() == 1);
  CHECK(plan.assignments[0].targets[0].quoted);
  CHECK(plan.values_patch == "suggestions:\n  var1: \"8080\"\n");
  const ChartPackage rewritten = ApplyRewrite(pkg, plan);
  CHECK(rewritten.files.at("templates/cm.yaml") ==
        "data:\n  a: \"{{ .Values.suggestions.var1 }}\"\n"
        "  b: \"{{ .Values.suggestions.var1 }}\"\n"
        "  c: \"{{ .Values.suggestions.var1 }}\"\n");
  BuiltinRenderer engine(BuiltinOptions{.seed = 2});
  CHECK(VerifyRewrite(pkg, plan, VariabilityKnowledgeBase{}, engine));
}

TEST_CASE("emitted diff applies with patch") {
  if (!PatchAvailable()) return;
  const ChartBuilder builder = HttpdChart();
  const ChartPackage pkg = builder.Package();
  const RewritePlan plan = PlanRewrite(pkg, DetectDuplicates(pkg, DuplicateConfig{}));
  const std::string diff = EmitDiff(pkg, plan);
  CHECK(diff.find("--- a/web/templates/deployment.yaml") != std::string::npos);
  TempDir dir;
  builder.WriteDir(dir.path());
  RunPatch(dir.path(), diff);
  const ChartPackage expected = ApplyRewrite(pkg, plan);
  for (const auto& [path, body] : expected.files) {
    CHECK(ReadFile(dir / ("web/" + path)) == body);
  }
}

TEST_CASE("fixture charts rewrite to identical renders") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 12; ++i) {
    const ChartPackage pkg = testing::DuplicateFixture(i, rng);
    const DuplicateReport report = DetectDuplicates(pkg, DuplicateConfig{});
    REQUIRE_FALSE(report.empty());
    const RewritePlan plan = PlanRewrite(pkg, report);
    CHECK(plan.warnings.empty());
    BuiltinRenderer engine(BuiltinOptions{.seed = 5});
    CHECK(VerifyRewrite(pkg, plan, VariabilityKnowledgeBase{}, engine));

    std::map<std::string, std::string> tree;
    for (const auto& [path, body] : pkg.files) tree[plan.chart_dir + "/" + path] = body;
    ApplyUnifiedDiff(tree, EmitDiff(pkg, plan));
    std::map<std::string, std::string> files;
    for (const auto& [path, body] : tree) {
      files[path.substr(plan.chart_dir.size() + 1)] = body;
    }
    const ChartPackage patched = ParseChartFiles(files);
    CHECK(patched.files == ApplyRewrite(pkg, plan).files);
    CHECK(DetectDuplicates(patched, DuplicateConfig{}).empty());
  }
}

TEST_CASE("spans outside literal leaves fail verification") {
  const ChartPackage pkg =
      ChartBuilder("adv", "1.0.0")
          .Template("a.yaml",
                    "# keep httpd-data here\n"
                    "a: httpd-data\nb: httpd-data\nc: httpd-data\n")
          .Package();
  RewritePlan plan = PlanRewrite(pkg, DetectDuplicates(pkg, DuplicateConfig{}));
  REQUIRE(plan.assignments.size() == 1);
  BuiltinRenderer engine(BuiltinOptions{.seed = 3});
  CHECK(VerifyRewrite(pkg, plan, VariabilityKnowledgeBase{}, engine));
  const std::size_t comment = std::string("# keep ").size();
  plan.assignments[0].targets[0].begin = comment;
  plan.assignments[0].targets[0].end = comment + std::string("httpd-data").size();
  CHECK_FALSE(VerifyRewrite(pkg, plan, VariabilityKnowledgeBase{}, engine));
}

RepoIndex DigestIndex() {
  RepoIndex index;
  auto add = [&](const std::string& name, const std::string& version,
                 std::vector<Maintainer> ms) {
    IndexEntry e;
    e.chart = ChartRef::FromNameVersion(name, version);
    e.maintainers = std::move(ms);
    index.entries.push_back(e);
  };
  add("web", "1.2.3", {{"Ann", "ann@example.com"}, {"Bob", "bob@example.com"}});
  add("db", "2.0.0", {{"Bob", "BOB@example.com"}});
  add("orphan", "0.1.0", {});
  return index;
}

DuplicateReport ReportFor(const std::string& name, const std::string& version) {
  DuplicateReport r;
  r.chart = ChartRef::FromNameVersion(name, version);
  r.groups.push_back({"v", {"x", "y", "z"}, 3});
  r.total_duplicate_values = 3;
  return r;
}

TEST_CASE("issue digests fan out per maintainer") {
  const RepoIndex index = DigestIndex();
  const IrregularityReport irr = DetectIrregularities(index);
  const std::set<std::string> linked{"web-1.2.3"};
  const DigestBundle bundle = BuildIssueDigests(
      index, irr, {ReportFor("web", "1.2.3"), ReportFor("db", "2.0.0")},
      "https://host/run/", &linked);
  REQUIRE(bundle.digests.size() == 2);
  CHECK(bundle.digests[0].recipient_email == "ann@example.com");
  CHECK(bundle.digests[0].issues.size() == 1);
  CHECK(bundle.digests[1].recipient_email == "bob@example.com");
  CHECK(bundle.digests[1].issues.size() == 2);
  CHECK(bundle.unique_issues == 2);
  CHECK(bundle.deliveries == 3);
  CHECK(bundle.avg_issues_per_recipient == 1.0);
  REQUIRE(bundle.unaddressable.issues.size() == 1);
  CHECK(bundle.unaddressable.issues[0].kind == IssueKind::kNoMaintainer);

  const Issue& web = bundle.digests[0].issues[0];
  CHECK(web.diff_link == "https://host/run/diffs/web-1.2.3.patch");
  for (const auto& issue : bundle.digests[1].issues) {
    if (issue.chart.name == "db") CHECK_FALSE(issue.diff_link.has_value());
  }

  const std::string msg = FormatDigestMessage(bundle.digests[0]);
  CHECK(msg.rfind("To: ann@example.com\nSubject: [chartqa] 1 issue in charts you maintain\n", 0) == 0);
  CHECK(msg.find("* web 1.2.3 [duplicates]") != std::string::npos);
  CHECK(msg.find("suggested change: https://host/run/diffs/web-1.2.3.patch") !=
        std::string::npos);

  TempDir dir;
  const auto written = WriteOutbox(bundle, dir / "outbox");
  CHECK(written.size() == 3);
  CHECK(std::filesystem::exists(dir / "outbox/unaddressable.eml"));
  CHECK(ReadFile(dir / "outbox/bob@example.com.eml") ==
        FormatDigestMessage(bundle.digests[1]));
  CHECK_THROWS_AS(WriteOutbox(bundle, dir / "outbox"), Error);
}

TEST_CASE("digest without findings") {
  RepoIndex index;
  IndexEntry e;
  e.chart = ChartRef::FromNameVersion("ok", "1.0.0");
  e.maintainers = {{"Ann", "ann@example.com"}};
  index.entries.push_back(e);
  const DigestBundle bundle =
      BuildIssueDigests(index, DetectIrregularities(index), {}, "http://x");
  CHECK(bundle.digests.empty());
  CHECK(bundle.unaddressable.issues.empty());
  CHECK(bundle.avg_issues_per_recipient == 0.0);
  CHECK(DiffFileName(e.chart) == "ok-1.0.0.patch");
}

}  // namespace
}  // namespace chartqa
