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

#include <chrono>
#include <random>

#include "chartqa/core/archive.h"
#include "chartqa/core/chart_parse.h"
#include "chartqa/core/error.h"
#include "chartqa/core/file_util.h"
#include "chartqa/core/stem.h"
#include "chartqa/core/value_tree.h"
#include "chartqa/core/yaml.h"
#include "../support/fixtures.h"
#include "../support/oracles.h"

namespace chartqa {
namespace {

using testing::ChartBuilder;

TEST_CASE("stem examples") {
  CHECK(MangleStem("magic-namespace-0.1.0.tgz").value() == "magicnamespace");
  CHECK(MangleStem("magic-namespace-0.1.1-2.tgz").value() == "magicnamespace");
  CHECK(MangleStem("redis-1.0.0.tgz").value() == "redis");
  CHECK(MangleStem("kafka-0.2.1-manager-1.0.tgz").value() == "kafka");
  CHECK(MangleStem("1-2-3.tgz").value() == "123");
  CHECK(MangleStem("chart").value() == "chart");
}

TEST_CASE("stem agrees with the rule interpreter on random names") {
  std::mt19937_64 rng(20180515);
  for (int i = 0; i < 1000; ++i) {
    const std::string name = testing::RandomChartFileName(rng);
    const std::string stem = MangleStem(name).value();
    INFO(name);
    CHECK(stem == testing::OracleStem(name));
    CHECK(stem.find('-') == std::string::npos);
    if (!stem.empty() && stem[0] >= '0' && stem[0] <= '9') {
      CHECK(name[0] >= '0');
      CHECK(name[0] <= '9');
    } else {
      CHECK(MangleStem(stem + "-1.0.0.tgz").value() == stem);
    }
  }
}

TEST_CASE("versioning overhead") {
  auto ref = [](const char* name, const char* version) {
    return ChartRef::FromNameVersion(name, version);
  };
  std::vector<ChartRef> three{ref("a", "1"), ref("a", "2"), ref("b", "1")};
  CHECK(VersioningOverhead(three) == doctest::Approx(0.5));
  std::vector<ChartRef> distinct{ref("a", "1"), ref("b", "1")};
  CHECK(VersioningOverhead(distinct) == 0.0);
  CHECK_THROWS_AS(VersioningOverhead(std::vector<ChartRef>{}), Error);

  std::vector<ChartRef> corpus;
  for (int i = 0; i < 153; ++i) {
    corpus.push_back(ref(("app" + std::string(1, 'a' + i % 26) +
                          std::string(1, 'a' + i / 26)).c_str(), "1.0.0"));
  }
  for (int i = 0; i < 24; ++i) corpus.push_back(ref(corpus[i].name.c_str(), "2.0.0"));
  CHECK(VersioningOverhead(corpus) == doctest::Approx(0.157).epsilon(0.0005 / 0.157));
}

TEST_CASE("gzip and tar round trip") {
  const std::string text(10000, 'q');
  CHECK(GunzipBytes(GzipBytes(text)) == text);
  std::string long_name(150, 'n');
  std::vector<ArchiveEntry> entries{{"top", "", true},
                                    {"top/a.txt", "alpha", false},
                                    {"top/" + long_name, "long", false}};
  const auto back = ReadTarGz(WriteTarGz(entries));
  REQUIRE(back.size() == 3);
  CHECK(back[1].data == "alpha");
  CHECK(back[2].path == "top/" + long_name);
  CHECK_THROWS_AS(GunzipBytes("not gzip"), Error);
}

TEST_CASE("chart archive parsing") {
  const auto archive = ChartBuilder("redis", "1.0.0")
                           .Values("port: 6379\n")
                           .Template("a.yaml", "kind: Service\n")
                           .Template("b.yaml", "kind: Deployment\n")
                           .Archive();
  const ChartPackage pkg = ParseChartArchive(archive);
  CHECK(pkg.metadata.name == "redis");
  CHECK(pkg.templates.size() == 2);
  CHECK(pkg.requirements.empty());

  std::vector<ArchiveEntry> no_meta{{"x/values.yaml", "a: 1\n", false}};
  try {
    ParseChartArchive(WriteTarGz(no_meta));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kMissingMetadata);
  }
  try {
    ParseChartArchive("garbage");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kMalformedArchive);
  }
  try {
    ParseChartFiles({{"Chart.yaml", "name: x\n"}});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kMetadataParseError);
  }
}

TEST_CASE("requirements and bundled subchart count once") {
  const std::string sub = ChartBuilder("mariadb", "2.1.0").Archive();
  const auto archive =
      ChartBuilder("wordpress", "0.6.0")
          .File("requirements.yaml",
                "dependencies:\n  - name: mariadb\n    version: 2.1.0\n")
          .File("charts/mariadb-2.1.0.tgz", sub)
          .Template("deployment.yaml", "kind: Deployment\n")
          .Archive();
  const auto entries = ReadTarGz(archive);
  int bundled = 0;
  for (const auto& e : entries) {
    if (e.path.rfind("wordpress/charts/", 0) == 0) ++bundled;
  }
  CHECK(bundled == 1);
  const ChartPackage pkg = ParseChartArchive(archive);
  REQUIRE(pkg.requirements.size() == 1);
  CHECK(pkg.requirements[0].name == "mariadb");
  CHECK(pkg.templates.size() == 1);
}

TEST_CASE("metadata round trip") {
  ChartMetadata m;
  m.name = "web";
  m.version = "1.2.3";
  m.description = "A: tricky # description";
  m.icon = "https://example.com/icon.png";
  m.maintainers = {{std::string("Ann"), std::string("ann@example.com")},
                   {std::string("Bob"), std::nullopt},
                   {std::nullopt, std::string("c@example.com")}};
  CHECK(ParseChartMetadata(SerializeChartMetadata(m)) == m);
  const ChartMetadata tolerant =
      ParseChartMetadata("name: x\nversion: 1\nunknownField: [1, 2]\n");
  CHECK(tolerant.version == "1");
}

TEST_CASE("canonical scalars") {
  CHECK(CanonicalScalar("True", ScalarStyle::kPlain) == "true");
  CHECK(CanonicalScalar("1.50", ScalarStyle::kPlain) == "1.5");
  CHECK(CanonicalScalar("007", ScalarStyle::kPlain) == "7");
  CHECK(CanonicalScalar("0x1f", ScalarStyle::kPlain) == "31");
  CHECK(CanonicalScalar("~", ScalarStyle::kPlain) == "null");
  CHECK(CanonicalScalar("8080", ScalarStyle::kQuoted) == "\"8080\"");
  CHECK(CanonicalScalar("web", ScalarStyle::kQuoted) == "web");
  CHECK(CanonicalScalar("yes", ScalarStyle::kPlain) == "yes");
  for (const char* c : {"8080", "\"8080\"", "true", "\"true\"", "1.5", "web",
                        "null", "\"null\""}) {
    CHECK(ScalarFromCanonical(c).Canonical() == c);
  }
}

TEST_CASE("yaml parse and emit") {
  const ValueTree t = ParseYaml("a:\n  b: [1, \"2\", x]\n  c: null\nd: 'q: r'\n");
  REQUIRE(t.FindPath("a.b") != nullptr);
  CHECK(t.FindPath("a.b")->sequence().size() == 3);
  CHECK(t.FindPath("d")->scalar().text == "q: r");
  CHECK(ParseYaml(EmitYaml(t)) == t);
  CHECK_THROWS_AS(ParseYaml("a: [\n"), YamlError);
  CHECK_THROWS_AS(ParseYaml("a: 1\n---\nb: 2\n"), YamlError);
  CHECK(ParseYaml("").is_null());

  const auto docs = SplitDocuments("# c\n---\na: 1\n---\nb: 2\n");
  REQUIRE(docs.size() == 2);
  CHECK(docs[0].index == 0);
  CHECK(docs[1].text.find("b: 2") != std::string_view::npos);
  CHECK(docs[1].text.find("a: 1") == std::string_view::npos);
}

TEST_CASE("value tree paths") {
  ValueTree t;
  t.SetPath("image.tag", ValueTree::Plain("1.0"));
  t.SetPath("image.repo", ValueTree::Plain("nginx"));
  t.SetPath("image.tag", ValueTree::Plain("2.0"));
  CHECK(t.FindPath("image.tag")->scalar().text == "2.0");
  CHECK(t.FindPath("image")->mapping().front().first == "tag");
  CHECK(t.FindPath("image.missing") == nullptr);
}

TEST_CASE("atomic file writes and locks") {
  testing::TempDir dir;
  const auto p = dir / "f.txt";
  WriteFileAtomic(p, "one");
  WriteFileAtomic(p, "two");
  CHECK(ReadFile(p) == "two");
  {
    FileLock lock(dir / "f.lock");
    CHECK(std::filesystem::exists(dir / "f.lock"));
  }
  CHECK_THROWS_AS(ReadFile(dir / "missing"), Error);
}

}  // namespace
}  // namespace chartqa
