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

#include <algorithm>
#include <random>
#include <thread>

#include "chartqa/analysis/duplicates.h"
#include "chartqa/analysis/knowledge_base.h"
#include "chartqa/analysis/quality.h"
#include "chartqa/analysis/template_scan.h"
#include "chartqa/analysis/variability.h"
#include "chartqa/core/error.h"
#include "chartqa/render/builtin_engine.h"
#include "chartqa/render/flatten.h"
#include "../support/fixtures.h"
#include "../support/oracles.h"

namespace chartqa {
namespace {

using testing::ChartBuilder;

const LiteralLeaf* LeafAt(const TemplateScan& scan, const std::string& path) {
  for (const auto& l : scan.leaves) {
    if (l.key_path == path) return &l;
  }
  return nullptr;
}

TEST_CASE("template scan neutralises directives") {
  const std::string body =
      "{{- if .Values.enabled }}\n"
      "kind: Service\n"
      "metadata:\n"
      "  name: {{ .Release.Name }}-svc\n"
      "  app: \"web-app\"\n"
      "  {{- include \"labels\" . | nindent 2 }}\n"
      "spec:\n"
      "  port: 8080\n"
      "{{- end }}\n";
  const TemplateScan scan = ScanTemplate({"templates/svc.yaml", body});
  REQUIRE_FALSE(scan.error.has_value());
  const LiteralLeaf* name = LeafAt(scan, "templates/svc.yaml#0/metadata/name");
  REQUIRE(name != nullptr);
  CHECK(name->templated);
  const LiteralLeaf* app = LeafAt(scan, "templates/svc.yaml#0/metadata/app");
  REQUIRE(app != nullptr);
  CHECK_FALSE(app->templated);
  CHECK(app->canonical == "web-app");
  CHECK(body.substr(app->source_offset, 9) == "\"web-app\"");
  const LiteralLeaf* port = LeafAt(scan, "templates/svc.yaml#0/spec/port");
  REQUIRE(port != nullptr);
  CHECK(body.substr(port->source_offset, 4) == "8080");

  const SentinelText neutral = NeutraliseDirectives("a: {{ .X }}\n");
  CHECK(ContainsSentinel(neutral.text));
  CHECK_FALSE(ContainsSentinel("a: b"));
}

TEST_CASE("repeated keys in template sources get suffixes") {
  const TemplateScan scan = ScanTemplate(
      {"templates/a.yaml", "a: x1\n{{- if .V }}\na: x2\n{{- end }}\n"});
  REQUIRE_FALSE(scan.error.has_value());
  CHECK(LeafAt(scan, "templates/a.yaml#0/a") != nullptr);
  CHECK(LeafAt(scan, "templates/a.yaml#0/a~d2") != nullptr);
}

TEST_CASE("duplicate detector examples") {
  DuplicateConfig config;
  const auto five =
      ChartBuilder("httpd", "1.0.0")
          .Template("a.yaml",
                    "a: httpd-data\nb: httpd-data\nc: httpd-data\n")
          .Template("b.yaml", "d: httpd-data\ne:\n  - httpd-data\n")
          .Package();
  DuplicateReport r = DetectDuplicates(five, config);
  REQUIRE(r.groups.size() == 1);
  CHECK(r.groups[0].canonical_value == "httpd-data");
  CHECK(r.groups[0].count == 5);
  CHECK(r.total_duplicate_values == 5);

  const auto markers =
      ChartBuilder("m", "1.0.0")
          .Template("a.yaml", "apiVersion: v1\n---\napiVersion: v1\n---\n"
                              "apiVersion: v1\n")
          .Package();
  CHECK(DetectDuplicates(markers, config).empty());

  const auto twice = ChartBuilder("t", "1.0.0")
                         .Template("a.yaml", "a: pair\nb: pair\n")
                         .Package();
  CHECK(DetectDuplicates(twice, config).empty());
  config.threshold = 2;
  CHECK(DetectDuplicates(twice, config).groups.size() == 1);
  config.threshold = 1;
  CHECK_THROWS_AS(DetectDuplicates(twice, config), Error);

  CHECK(DetectDuplicates(ChartBuilder("e", "1.0.0").Package(), {}).empty());
}

TEST_CASE("templated values and unparseable templates") {
  const auto pkg =
      ChartBuilder("t", "1.0.0")
          .Template("a.yaml",
                    "a: {{ .Values.x }}\nb: {{ .Values.x }}\nc: {{ .Values.x }}\n")
          .Template("bad.yaml", "a: [b\n")
          .Package();
  const DuplicateReport r = DetectDuplicates(pkg, {});
  CHECK(r.groups.empty());
  REQUIRE(r.unparseable.size() == 1);
  CHECK(r.unparseable[0].template_path == "templates/bad.yaml");
}

TEST_CASE("ordering and quoting") {
  const auto pkg =
      ChartBuilder("o", "1.0.0")
          .Template("a.yaml",
                    "a: bbb\nb: bbb\nc: bbb\nd: aaa\ne: aaa\nf: aaa\n"
                    "g: 8080\nh: 8080\ni: 8080\nj: \"8080\"\nk: '8080'\n"
                    "l: \"8080\"\nm: 8080\n")
          .Package();
  const DuplicateReport r = DetectDuplicates(pkg, {});
  REQUIRE(r.groups.size() == 4);
  CHECK(r.groups[0].canonical_value == "8080");
  CHECK(r.groups[0].count == 4);
  CHECK(r.groups[1].canonical_value == "\"8080\"");
  CHECK(r.groups[2].canonical_value == "aaa");
  CHECK(r.groups[3].canonical_value == "bbb");
}

TEST_CASE("duplicate detector agrees with brute-force counting") {
  std::mt19937_64 rng(4242);
  int non_empty = 0;
  for (int i = 0; i < 300; ++i) {
    const testing::RandomCorpus corpus = testing::RandomDuplicateCorpus(rng, 50);
    DuplicateConfig config;
    config.threshold = 2 + static_cast<int>(rng() % 3);
    const DuplicateReport r = DetectDuplicates(corpus.package, config);
    REQUIRE(r.unparseable.empty());
    std::vector<testing::OracleGroup> got;
    for (const auto& g : r.groups) {
      CHECK(g.count == static_cast<int>(g.occurrences.size()));
      got.push_back({g.canonical_value,
                     {g.occurrences.begin(), g.occurrences.end()}});
    }
    std::sort(got.begin(), got.end(),
              [](const auto& a, const auto& b) { return a.value < b.value; });
    CHECK(got == testing::OracleDuplicates(corpus.leaves, config));
    if (!got.empty()) ++non_empty;
  }
  CHECK(non_empty > 100);
}

TEST_CASE("knowledge base semantics and persistence") {
  VariabilityKnowledgeBase kb;
  const StemName stem("db");
  CHECK(kb.Add(stem, "templates/s.yaml#0/pw", "first"));
  CHECK_FALSE(kb.Add(stem, "templates/s.yaml#0/pw", "second"));
  CHECK(kb.Find(stem, "templates/s.yaml#0/pw")->value == "first");
  kb.Add(StemName("web"), "templates/a.yaml#0/t", "x|y");
  CHECK(kb.CountFor(stem) == 1);
  CHECK(kb.OverridesFor(stem).size() == 1);

  const auto back = VariabilityKnowledgeBase::FromJson(kb.ToJson());
  CHECK(back.size() == 2);
  CHECK(back.Find(StemName("web"), "templates/a.yaml#0/t")->value == "x|y");

  testing::TempDir dir;
  CHECK(VariabilityKnowledgeBase::Load(dir / "kb.json").size() == 0);
  kb.Save(dir / "kb.json");
  CHECK(VariabilityKnowledgeBase::Load(dir / "kb.json").size() == 2);
  testing::WriteText(dir / "bad.json", "[1, 2]");
  CHECK_THROWS_AS(VariabilityKnowledgeBase::Load(dir / "bad.json"), Error);

  kb.Reset(stem);
  CHECK(kb.CountFor(stem) == 0);
  CHECK(kb.size() == 1);
}

TEST_CASE("concurrent knowledge base updates are serialised") {
  testing::TempDir dir;
  const auto path = dir / "kb.json";
  std::vector<std::thread> workers;
  for (int t = 0; t < 8; ++t) {
    workers.emplace_back([&, t] {
      for (int i = 0; i < 5; ++i) {
        UpdateKnowledgeBaseFile(path, [&](VariabilityKnowledgeBase& kb) {
          kb.Add(StemName("s" + std::to_string(t)), "p" + std::to_string(i),
                 "v");
        });
      }
    });
  }
  for (auto& w : workers) w.join();
  CHECK(VariabilityKnowledgeBase::Load(path).size() == 40);
}

ChartPackage RandomKeysChart(int keys) {
  std::string body = "kind: Secret\ndata:\n  user: admin\n";
  for (int i = 0; i < keys; ++i) {
    body += "  key" + std::to_string(i) + ": {{ randAlphaNum 12 | quote }}\n";
  }
  return ChartBuilder("secrets", "1.0.0")
      .Values("a: 1\n")
      .Template("secret.yaml", body)
      .Package();
}

TEST_CASE("learning variable values") {
  BuiltinRenderer engine;
  VariabilityKnowledgeBase kb;
  const ChartPackage one = RandomKeysChart(1);
  CHECK(LearnVariability(one, kb, engine).new_paths.size() == 1);
  CHECK(LearnVariability(one, kb, engine).new_paths.empty());
  CHECK(kb.size() == 1);

  const auto fixed = ChartBuilder("fixed", "1.0.0")
                         .Template("a.yaml", "a: b\n")
                         .Package();
  VariabilityKnowledgeBase empty;
  CHECK(LearnVariability(fixed, empty, engine).new_paths.empty());
  CHECK(empty.size() == 0);

  const auto broken = ChartBuilder("broken", "1.0.0")
                          .Template("a.yaml", "a: {{ .Values.none }}\n")
                          .Package();
  try {
    LearnVariability(broken, empty, engine);
    FAIL("expected RenderFailed");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kRenderFailed);
  }
}

TEST_CASE("three random keys converge after one pass") {
  const ChartPackage pkg = RandomKeysChart(3);
  BuiltinRenderer oracle_engine(BuiltinOptions{.seed = 11});
  const auto a = FlattenDocuments(RenderChart(pkg, {}, oracle_engine).manifests);
  const auto b = FlattenDocuments(RenderChart(pkg, {}, oracle_engine).manifests);
  std::vector<std::string> differing;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].value != b[i].value) differing.push_back(a[i].key_path);
  }

  BuiltinRenderer engine;
  VariabilityKnowledgeBase kb;
  const LearnResult learned = LearnVariability(pkg, kb, engine);
  CHECK(learned.new_paths == differing);
  CHECK(kb.size() == 3);
  const std::string first =
      SerializeManifests(StabilizeRender(pkg, kb, engine).manifests);
  const std::string second =
      SerializeManifests(StabilizeRender(pkg, kb, engine).manifests);
  CHECK(first == second);
  const std::size_t before = kb.size();
  LearnVariability(pkg, kb, engine);
  CHECK(kb.size() >= before);
}

TEST_CASE("quality report composes the detectors") {
  BuiltinRenderer engine;
  const auto pkg =
      ChartBuilder("app", "1.0.0")
          .Template("a.yaml",
                    "a: same-value\nb: same-value\nc: same-value\n"
                    "pw: {{ randAlphaNum 8 }}\n")
          .Template("missing.yaml", "x: {{ .Values.nope }}\n")
          .Template("NOTES.txt", "hello\n")
          .Package();
  VariabilityKnowledgeBase kb;
  const QualityReport r = AnalyzeChart(pkg, kb, {}, engine);
  CHECK(r.template_count == 2);
  CHECK(r.variable_value_count == 1);
  CHECK(r.has_duplicates());
  REQUIRE(r.render_failures.size() == 1);
  CHECK(r.render_failures[0].category == FailureCategory::kMissingValue);
  CHECK(kb.size() == 0);
}

}  // namespace
}  // namespace chartqa
