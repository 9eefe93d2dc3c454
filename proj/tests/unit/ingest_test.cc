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
#include <httplib.h>
#include <yaml-cpp/yaml.h>

#include <filesystem>
#include <set>
#include <thread>

#include "chartqa/core/error.h"
#include "chartqa/core/file_util.h"
#include "chartqa/ingest/digest.h"
#include "chartqa/ingest/fetch.h"
#include "chartqa/ingest/local_dir.h"
#include "chartqa/ingest/repo_index.h"
#include "chartqa/ingest/snapshot.h"
#include "../support/fixtures.h"

namespace chartqa {
namespace {

namespace fs = std::filesystem;
using testing::ChartBuilder;
using testing::TempDir;
using testing::WriteText;

std::string IndexYaml(const std::vector<ChartBuilder>& charts,
                      bool with_maintainers = true) {
  std::map<std::string, std::vector<const ChartBuilder*>> by_name;
  for (const auto& c : charts) by_name[c.name()].push_back(&c);
  std::string out = "apiVersion: v1\nentries:\n";
  for (const auto& [name, list] : by_name) {
    out += "  " + name + ":\n";
    for (const ChartBuilder* c : list) {
      out += "    - name: " + name + "\n      version: " + c->version() +
             "\n      urls:\n        - " + name + "-" + c->version() +
             ".tgz\n";
      if (with_maintainers) {
        out += "      maintainers:\n        - name: Ann\n"
               "          email: ann@example.com\n";
      }
    }
  }
  return out;
}

TEST_CASE("index with two versions of one chart") {
  const RepoIndex index = ParseRepoIndex(
      "apiVersion: v1\nentries:\n  redis:\n"
      "    - {name: redis, version: 1.0.0}\n"
      "    - {name: redis, version: 1.1.0}\n",
      "mem");
  REQUIRE(index.entries.size() == 2);
  CHECK(index.entries[0].chart.stem == index.entries[1].chart.stem);
  CHECK(index.entries[0].maintainers.empty());
}

TEST_CASE("entry count equals version records") {
  std::string raw = "apiVersion: v1\nentries:\n";
  int records = 0;
  std::set<std::string> stems;
  for (int app = 0; app < 153; ++app) {
    const std::string name = "app" + std::to_string(app) + "x";
    raw += "  " + name + ":\n";
    const int versions = app < 24 ? 2 : 1;
    for (int v = 0; v < versions; ++v) {
      raw += "    - name: " + name + "\n      version: " + std::to_string(v) +
             ".0.0\n      maintainers:\n        - name: M" +
             std::to_string(app) + "\n";
      ++records;
    }
  }
  const RepoIndex index = ParseRepoIndex(raw, "mem");
  std::size_t oracle = 0;
  const YAML::Node root = YAML::Load(raw);
  for (const auto& app : root["entries"]) oracle += app.second.size();
  CHECK(index.entries.size() == oracle);
  CHECK(records == 177);
  for (const auto& e : index.entries) stems.insert(e.chart.stem.value());
  CHECK(stems.size() == 153);
}

TEST_CASE("index errors") {
  auto code_of = [](const std::string& raw) {
    try {
      ParseRepoIndex(raw, "mem");
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kInvalidArgument;
  };
  CHECK(code_of("entries: {}\n") == ErrorCode::kEmptyIndex);
  CHECK(code_of("apiVersion: v1\n") == ErrorCode::kEmptyIndex);
  CHECK(code_of("entries: [\n") == ErrorCode::kIndexParseError);
  CHECK(code_of("- a\n") == ErrorCode::kIndexParseError);
  CHECK(code_of("entries:\n  a:\n    - {name: a}\n") ==
        ErrorCode::kIndexParseError);
}

TEST_CASE("timestamps") {
  const Timestamp t = ParseTimestamp("2018-05-15T13:04:05Z");
  CHECK(FormatTimestamp(t) == "2018-05-15T13:04:05Z");
  CHECK(FormatDate(ParseTimestamp("2018-05-15")) == "2018-05-15");
  CHECK_THROWS_AS(ParseTimestamp("2018-02-30"), Error);
}

TEST_CASE("fetch from the filesystem with digest checks") {
  TempDir dir;
  WriteText(dir / "a.tgz", "bytes");
  CHECK(FetchArchive((dir / "a.tgz").string()) == "bytes");
  CHECK(FetchArchive("file://" + (dir / "a.tgz").string(), Sha256Hex("bytes")) ==
        "bytes");
  try {
    FetchArchive((dir / "a.tgz").string(), std::string(64, '0'));
    FAIL("expected mismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kChecksumMismatch);
  }
  try {
    FetchArchive((dir / "none.tgz").string());
    FAIL("expected fetch error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kFetchError);
  }
  CHECK(Sha256Hex("abc") ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(ResolveLocation("https://h/charts/index.yaml", "a-1.tgz") ==
        "https://h/charts/a-1.tgz");
  CHECK(ResolveLocation("/srv/repo/index.yaml", "a-1.tgz") ==
        "/srv/repo/a-1.tgz");
  CHECK(ResolveLocation("/srv/repo/index.yaml", "https://x/a.tgz") ==
        "https://x/a.tgz");
}

TEST_CASE("fetch over http") {
  httplib::Server server;
  server.Get("/a.tgz", [](const httplib::Request&, httplib::Response& res) {
    res.set_content("payload", "application/gzip");
  });
  const int port = server.bind_to_any_port("127.0.0.1");
  REQUIRE(port > 0);
  std::thread worker([&] { server.listen_after_bind(); });
  server.wait_until_ready();
  const std::string base = "http://127.0.0.1:" + std::to_string(port);
  CHECK(FetchArchive(base + "/a.tgz") == "payload");
  CHECK_THROWS_AS(FetchArchive(base + "/missing.tgz"), Error);
  server.stop();
  worker.join();
}

TEST_CASE("local directory ingestion") {
  TempDir dir;
  ChartBuilder("one", "1.0.0").WriteDir(dir.path());
  ChartBuilder("two", "1.0.0").WriteDir(dir.path());
  WriteText(dir / "three-1.0.0.tgz", ChartBuilder("three", "1.0.0").Archive());
  IngestResult r = IngestLocalDir(dir.path());
  CHECK(r.charts.size() == 3);
  CHECK(r.failures.empty());

  TempDir broken;
  ChartBuilder("good", "1.0.0").WriteDir(broken.path());
  WriteText(broken / "bad" / "values.yaml", "a: 1\n");
  r = IngestLocalDir(broken.path());
  CHECK(r.charts.size() == 1);
  REQUIRE(r.failures.size() == 1);
  CHECK(r.failures[0].code == ErrorCode::kMissingMetadata);

  CHECK_THROWS_AS(IngestLocalDir(dir / "absent"), Error);
}

TEST_CASE("nested repository discovery matches a filesystem walk") {
  TempDir dir;
  for (int i = 0; i < 12; ++i) {
    fs::path parent = dir.path();
    for (int d = 0; d < i % 4; ++d) parent /= "level" + std::to_string(d);
    parent /= "group" + std::to_string(i);
    ChartBuilder("chart" + std::to_string(i), "0.1.0")
        .Template("cm.yaml", "kind: ConfigMap\n")
        .WriteDir(parent);
  }
  const ChartBuilder with_sub = ChartBuilder("umbrella", "1.0.0").File(
      "charts/inner/Chart.yaml", "name: inner\nversion: 1.0.0\n");
  with_sub.WriteDir(dir.path());
  std::size_t oracle = 0;
  for (const auto& e : fs::recursive_directory_iterator(dir.path())) {
    if (e.path().filename() == "Chart.yaml" &&
        e.path().parent_path().parent_path().filename() != "charts") {
      ++oracle;
    }
  }
  const IngestResult r = IngestLocalDir(dir.path());
  CHECK(r.charts.size() == oracle);
  CHECK(r.charts.size() == 13);
  CHECK(r.failures.empty());
}

TEST_CASE("snapshot store records, lists and replays") {
  TempDir dir;
  TempDir repo;
  const std::vector<ChartBuilder> charts{ChartBuilder("web", "1.0.0"),
                                         ChartBuilder("db", "2.0.0")};
  for (const auto& c : charts) {
    WriteText(repo / (c.name() + "-" + c.version() + ".tgz"), c.Archive());
  }
  WriteText(repo / "index.yaml", IndexYaml(charts));
  SnapshotStore store(dir / "store");
  const Timestamp day1 = ParseTimestamp("2018-05-15T10:00:00Z");
  const std::string id =
      TakeSnapshot((repo / "index.yaml").string(), store, 2, day1);
  CHECK(id == "2018-05-15");
  try {
    TakeSnapshot((repo / "index.yaml").string(), store, 2,
                 ParseTimestamp("2018-05-15T23:00:00Z"));
    FAIL("expected duplicate");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kDuplicateSnapshot);
  }
  const std::string manifest = ReadFile(dir / "store" / id / "manifest.json");

  const Snapshot s = store.Load(id);
  CHECK(s.index.entries.size() == 2);
  CHECK(s.packages.size() == 2);
  CHECK(s.content_digests.at("web-1.0.0.tgz") ==
        Sha256Hex(charts[0].Archive()));
  CHECK(s.packages.at("db-2.0.0.tgz").metadata.name == "db");

  TakeSnapshot((repo / "index.yaml").string(), store, 1,
               ParseTimestamp("2018-05-16"));
  CHECK(store.List() == std::vector<std::string>{"2018-05-15", "2018-05-16"});
  CHECK(ReadFile(dir / "store" / id / "manifest.json") == manifest);
}

TEST_CASE("a failed fetch leaves no partial snapshot") {
  TempDir dir;
  TempDir repo;
  const std::vector<ChartBuilder> charts{ChartBuilder("web", "1.0.0"),
                                         ChartBuilder("gone", "1.0.0")};
  WriteText(repo / "web-1.0.0.tgz", charts[0].Archive());
  WriteText(repo / "index.yaml", IndexYaml(charts));
  SnapshotStore store(dir / "store");
  CHECK_THROWS_AS(TakeSnapshot((repo / "index.yaml").string(), store, 2,
                               ParseTimestamp("2018-05-15")),
                  Error);
  CHECK(store.List().empty());
  std::size_t leftovers = 0;
  if (fs::exists(dir / "store")) {
    for (const auto& e : fs::directory_iterator(dir / "store")) {
      if (e.path().filename() != ".lock") ++leftovers;
    }
  }
  CHECK(leftovers == 0);
}

}  // namespace
}  // namespace chartqa
