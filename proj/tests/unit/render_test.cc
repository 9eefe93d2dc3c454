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

#include "chartqa/core/error.h"
#include "chartqa/core/yaml.h"
#include "chartqa/render/builtin_engine.h"
#include "chartqa/render/external_adapter.h"
#include "chartqa/render/flatten.h"
#include "chartqa/render/process.h"
#include "chartqa/render/render.h"
#include "../support/fixtures.h"
#include "../support/oracles.h"

namespace chartqa {
namespace {

using testing::ChartBuilder;

std::string ValueAt(const RenderResult& r, const std::string& path) {
  for (const auto& leaf : FlattenDocuments(r.manifests)) {
    if (leaf.key_path == path) return leaf.value;
  }
  return "<absent>";
}

TEST_CASE("plain substitution") {
  BuiltinRenderer engine;
  const auto pkg = ChartBuilder("web", "1.0.0")
                       .Values("app: web\n")
                       .Template("a.yaml", "name: {{ .Values.app }}\n")
                       .Package();
  const RenderResult r = RenderChart(pkg, {}, engine);
  CHECK(r.failures.empty());
  CHECK(ValueAt(r, "templates/a.yaml#0/name") == "web");
}

TEST_CASE("built-in functions and context") {
  BuiltinRenderer engine;
  const auto pkg =
      ChartBuilder("web", "1.2.3")
          .Values("name: Web\nport: 80\n")
          .Template("a.yaml",
                    "{{/* header */}}\n"
                    "release: {{ .Release.Name }}\n"
                    "ns: {{ .Release.Namespace }}\n"
                    "chart: {{ .Chart.Name }}-{{ .Chart.Version }}\n"
                    "upper: {{ .Values.name | upper }}\n"
                    "lower: {{ .Values.name | lower }}\n"
                    "port: {{ .Values.port | quote }}\n"
                    "fallback: {{ .Values.absent | default \"dflt\" }}\n"
                    "trimmed: a   {{- \"x\" }}\n")
          .Package();
  const RenderResult r = RenderChart(pkg, {}, engine);
  REQUIRE(r.failures.empty());
  CHECK(ValueAt(r, "templates/a.yaml#0/release") == "release-name");
  CHECK(ValueAt(r, "templates/a.yaml#0/ns") == "default");
  CHECK(ValueAt(r, "templates/a.yaml#0/chart") == "web-1.2.3");
  CHECK(ValueAt(r, "templates/a.yaml#0/upper") == "WEB");
  CHECK(ValueAt(r, "templates/a.yaml#0/lower") == "web");
  CHECK(ValueAt(r, "templates/a.yaml#0/port") == "\"80\"");
  CHECK(ValueAt(r, "templates/a.yaml#0/fallback") == "dflt");
  CHECK(ValueAt(r, "templates/a.yaml#0/trimmed") == "ax");
}

TEST_CASE("random values differ between renders at exactly that key") {
  BuiltinRenderer engine;
  const auto pkg =
      ChartBuilder("db", "1.0.0")
          .Template("secret.yaml",
                    "kind: Secret\ndata:\n  user: admin\n"
                    "  password: {{ randAlphaNum 16 | quote }}\n")
          .Package();
  const auto a = FlattenDocuments(RenderChart(pkg, {}, engine).manifests);
  const auto b = FlattenDocuments(RenderChart(pkg, {}, engine).manifests);
  REQUIRE(a.size() == b.size());
  std::vector<std::string> differing;
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].key_path == b[i].key_path);
    if (a[i].value != b[i].value) differing.push_back(a[i].key_path);
  }
  CHECK(differing ==
        std::vector<std::string>{"templates/secret.yaml#0/data/password"});
}

TEST_CASE("seeded engine is reproducible") {
  const auto pkg = ChartBuilder("db", "1.0.0")
                       .Template("s.yaml", "p: {{ randAlphaNum 8 }}\n")
                       .Package();
  BuiltinRenderer a(BuiltinOptions{.seed = 7});
  BuiltinRenderer b(BuiltinOptions{.seed = 7});
  CHECK(SerializeManifests(RenderChart(pkg, {}, a).manifests) ==
        SerializeManifests(RenderChart(pkg, {}, b).manifests));
}

TEST_CASE("failure categories") {
  BuiltinRenderer engine;
  const auto pkg =
      ChartBuilder("app", "1.0.0")
          .Template("missing.yaml", "password: {{ .Values.password }}\n")
          .Template("loop.yaml", "{{ range .Values.items }}x{{ end }}\n")
          .Template("broken.yaml", "a: [unclosed\n")
          .Template("ok.yaml", "fine: yes\n")
          .Package();
  const RenderResult r = RenderChart(pkg, {}, engine);
  std::map<std::string, FailureCategory> by_path;
  for (const auto& f : r.failures) by_path[f.template_path] = f.category;
  CHECK(by_path.at("templates/missing.yaml") == FailureCategory::kMissingValue);
  CHECK(by_path.at("templates/loop.yaml") ==
        FailureCategory::kEngineUnsupported);
  CHECK(by_path.at("templates/broken.yaml") == FailureCategory::kSyntaxError);
  CHECK(ValueAt(r, "templates/ok.yaml#0/fine") == "yes");
}

TEST_CASE("overrides take precedence") {
  BuiltinRenderer engine;
  const auto pkg =
      ChartBuilder("app", "1.0.0")
          .Values("image:\n  tag: \"1.0\"\n")
          .Template("a.yaml",
                    "tag: {{ .Values.image.tag }}\n"
                    "token: {{ randAlphaNum 10 }}\n")
          .Package();
  const Overrides o{{"image.tag", "2.0"},
                    {"templates/a.yaml#0/token", "pinned"}};
  const RenderResult r = RenderChart(pkg, o, engine);
  CHECK(ValueAt(r, "templates/a.yaml#0/tag") == "2.0");
  CHECK(ValueAt(r, "templates/a.yaml#0/token") == "pinned");
  CHECK(r.manifests.render_overrides_used.size() == 2);
  CHECK(SerializeManifests(r.manifests) ==
        SerializeManifests(RenderChart(pkg, o, engine).manifests));
}

TEST_CASE("flatten examples") {
  RenderedManifestSet set;
  set.documents.push_back({"t.yaml", 0, ParseYaml("a:\n  b: x\n")});
  set.documents.push_back({"t.yaml", 1, ParseYaml("a: [x, y]\n")});
  const auto leaves = FlattenDocuments(set);
  REQUIRE(leaves.size() == 3);
  CHECK(leaves[0] == FlatLeaf{"t.yaml#0/a/b", "x"});
  CHECK(leaves[1] == FlatLeaf{"t.yaml#1/a[0]", "x"});
  CHECK(leaves[2] == FlatLeaf{"t.yaml#1/a[1]", "y"});
  CHECK(EscapePathKey("a/b~c[0]") == "a~1b~0c~20]");
  REQUIRE(FindLeaf(set, "t.yaml#1/a[1]") != nullptr);
  CHECK(FindLeaf(set, "t.yaml#1/a[2]") == nullptr);
}

ValueTree RandomTree(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth > 2 ? 1 : 3);
  switch (pick(rng)) {
    case 0:
      return ValueTree::Plain(std::to_string(rng() % 100));
    case 1:
      return ValueTree::Quoted("s" + std::to_string(rng() % 7));
    case 2: {
      ValueTree::Sequence seq;
      for (int i = 0, n = static_cast<int>(rng() % 4); i < n; ++i) {
        seq.push_back(RandomTree(rng, depth + 1));
      }
      return ValueTree(seq);
    }
    default: {
      ValueTree::Mapping map;
      static const char* kKeys[] = {"a", "b/c", "d~e", "f[g", "h"};
      for (int i = 0, n = static_cast<int>(rng() % 4); i < n; ++i) {
        map.emplace_back(kKeys[i], RandomTree(rng, depth + 1));
      }
      return ValueTree(map);
    }
  }
}

TEST_CASE("flatten agrees with a direct tree walk") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 300; ++i) {
    RenderedManifestSet set;
    set.documents.push_back({"templates/x.yaml", 0, RandomTree(rng, 0)});
    set.documents.push_back({"templates/x.yaml", 1, RandomTree(rng, 0)});
    std::vector<FlatLeaf> oracle;
    for (const auto& d : set.documents) {
      const ValueTree& body = d.body;
      if (body.is_mapping() || body.is_sequence() || body.is_scalar()) {
        testing::OracleFlatten(body, DocumentPath(d.template_path, d.doc_index),
                               oracle);
      }
    }
    auto leaves = FlattenDocuments(set);
    auto scalars_only = [](std::vector<FlatLeaf> v) {
      v.erase(std::remove_if(v.begin(), v.end(),
                             [](const FlatLeaf& l) { return l.value == "null"; }),
              v.end());
      std::sort(v.begin(), v.end());
      return v;
    };
    CHECK(scalars_only(leaves) == scalars_only(oracle));
  }
}

TEST_CASE("external output and error parsing") {
  RenderResult r;
  ParseExternalOutput(
      "---\n# Source: web/templates/a.yaml\nx: 1\n"
      "---\n# Source: web/templates/a.yaml\ny: 2\n"
      "---\n# Source: web/templates/b.yaml\nz: [\n",
      r);
  REQUIRE(r.manifests.documents.size() == 2);
  CHECK(r.manifests.documents[1].doc_index == 1);
  REQUIRE(r.failures.size() == 1);
  CHECK(r.failures[0].template_path == "templates/b.yaml");

  const auto failures = ParseExternalErrors(
      "Error: render error in \"web/templates/s.yaml\": template: "
      "web/templates/s.yaml:3:12: executing at <.Values.pw>: nil pointer\n");
  REQUIRE(failures.size() == 1);
  CHECK(failures[0].template_path == "templates/s.yaml");
  CHECK(failures[0].category == FailureCategory::kMissingValue);
}

TEST_CASE("external adapter drives a renderer binary") {
  CHECK_THROWS_AS(ExternalRenderer("/nonexistent/renderer"), Error);
  ExternalRenderer external(CHARTQA_FAKE_RENDERER);
  BuiltinRenderer builtin;
  const auto pkg =
      ChartBuilder("web", "1.0.0")
          .Values("app: web\nport: 8080\nimage:\n  tag: \"1.15\"\n")
          .Template("a.yaml",
                    "name: {{ .Release.Name }}-{{ .Values.app }}\n"
                    "port: {{ .Values.port }}\n"
                    "---\nimage: nginx:{{ .Values.image.tag }}\n")
          .Template("b.yaml", "chart: {{ .Chart.Name }}\n")
          .Package();
  const RenderResult ext = RenderChart(pkg, {{"app", "api"}}, external);
  const RenderResult own = RenderChart(pkg, {{"app", "api"}}, builtin);
  CHECK(ext.failures.empty());
  CHECK(FlattenDocuments(ext.manifests) == FlattenDocuments(own.manifests));
  CHECK(ValueAt(ext, "templates/a.yaml#0/name") == "release-name-api");

  const auto bad = ChartBuilder("web", "1.0.0")
                       .Template("a.yaml", "pw: {{ .Values.password }}\n")
                       .Package();
  const RenderResult failed = RenderChart(bad, {}, external);
  REQUIRE(failed.failures.size() == 1);
  CHECK(failed.failures[0].category == FailureCategory::kMissingValue);
  CHECK(failed.failures[0].template_path == "templates/a.yaml");
}

TEST_CASE("subprocess capture") {
  const ProcessResult r = RunProcess({"sh", "-c", "echo out; echo err >&2; exit 3"});
  CHECK(r.out == "out\n");
  CHECK(r.err == "err\n");
  CHECK(r.exit_code == 3);
  CHECK(FindExecutable("sh").size() > 0);
  CHECK_THROWS_AS(RunProcess({"chartqa-no-such-binary"}), Error);
}

TEST_CASE("renderable template filter") {
  CHECK(IsRenderableTemplate("templates/a.yaml"));
  CHECK(IsRenderableTemplate("templates/sub/a.yml"));
  CHECK_FALSE(IsRenderableTemplate("templates/NOTES.txt"));
  CHECK_FALSE(IsRenderableTemplate("templates/_helpers.tpl"));
}

}  // namespace
}  // namespace chartqa
