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

#include "chartqa/ingest/snapshot.h"

#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "chartqa/core/chart_parse.h"
#include "chartqa/core/error.h"
#include "chartqa/core/file_util.h"
#include "chartqa/ingest/digest.h"
#include "chartqa/ingest/fetch.h"

namespace chartqa {
namespace fs = std::filesystem;

namespace {

constexpr int kManifestFormat = 1;

bool SafeFileName(const std::string& name) {
  return !name.empty() && name.find('/') == std::string::npos &&
         name != "." && name != "..";
}

}  // namespace

SnapshotStore::SnapshotStore(fs::path root) : root_(std::move(root)) {
  std::error_code ec;
  fs::create_directories(root_, ec);
  if (ec) {
    throw Error(ErrorCode::kStorageError,
                "cannot create store " + root_.string() + ": " + ec.message());
  }
}

std::string SnapshotStore::Record(
    const RepoIndex& index,
    const std::map<std::string, std::string>& archives) {
  const std::string id = FormatDate(index.fetched_at);
  FileLock lock(root_ / ".lock");
  if (Contains(id)) {
    throw Error(ErrorCode::kDuplicateSnapshot,
                "snapshot " + id + " already recorded");
  }
  const fs::path tmp = root_ / (".tmp-" + id + "-" + std::to_string(::getpid()));
  std::error_code ec;
  fs::remove_all(tmp, ec);
  try {
    fs::create_directories(tmp / "archives");
    nlohmann::json digests = nlohmann::json::object();
    for (const auto& [file_name, bytes] : archives) {
      if (!SafeFileName(file_name)) {
        throw Error(ErrorCode::kStorageError, "unsafe archive name " + file_name);
      }
      WriteFile(tmp / "archives" / file_name, bytes);
      digests[file_name] = Sha256Hex(bytes);
    }
    WriteFile(tmp / "index.yaml", index.raw);
    nlohmann::json manifest = {
        {"format", kManifestFormat},
        {"id", id},
        {"source", index.source},
        {"fetched_at", FormatTimestamp(index.fetched_at)},
        {"digest_algorithm", "sha256"},
        {"digests", digests},
    };
    WriteFile(tmp / "manifest.json", manifest.dump(2) + "\n");
    fs::rename(tmp, root_ / id);
  } catch (const fs::filesystem_error& e) {
    fs::remove_all(tmp, ec);
    throw Error(ErrorCode::kStorageError, e.what());
  } catch (...) {
    fs::remove_all(tmp, ec);
    throw;
  }
  return id;
}

std::vector<std::string> SnapshotStore::List() const {
  std::vector<std::string> ids;
  for (const auto& entry : fs::directory_iterator(root_)) {
    const std::string name = entry.path().filename().string();
    if (entry.is_directory() && name[0] != '.' &&
        fs::exists(entry.path() / "manifest.json")) {
      ids.push_back(name);
    }
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

bool SnapshotStore::Contains(const std::string& id) const {
  std::error_code ec;
  return fs::exists(root_ / id, ec);
}

std::string SnapshotStore::ReadArchive(const std::string& id,
                                       const std::string& file_name) const {
  return ReadFile(root_ / id / "archives" / file_name);
}

Snapshot SnapshotStore::Load(const std::string& id, bool parse_packages) const {
  const fs::path dir = root_ / id;
  if (!fs::exists(dir / "manifest.json")) {
    throw Error(ErrorCode::kStorageError, "unknown snapshot " + id);
  }
  nlohmann::json manifest;
  try {
    manifest = nlohmann::json::parse(ReadFile(dir / "manifest.json"));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kStorageError,
                "corrupt manifest for " + id + ": " + e.what());
  }
  Snapshot snap;
  snap.id = id;
  snap.index = ParseRepoIndex(ReadFile(dir / "index.yaml"),
                              manifest.value("source", ""),
                              ParseTimestamp(manifest.value("fetched_at", id)));
  for (const auto& [file_name, digest] : manifest["digests"].items()) {
    snap.content_digests[file_name] = digest.get<std::string>();
    if (!parse_packages) continue;
    try {
      snap.packages.emplace(file_name,
                            ParseChartArchive(ReadArchive(id, file_name)));
    } catch (const Error& e) {
      snap.package_errors[file_name] = e.what();
    }
  }
  return snap;
}

std::string RecordSnapshot(const RepoIndex& index,
                           const std::map<std::string, std::string>& archives,
                           SnapshotStore& store) {
  return store.Record(index, archives);
}

FetchedRepository FetchRepository(const std::string& index_location, int jobs,
                                  Timestamp fetched_at) {
  FetchedRepository repo;
  repo.index =
      ParseRepoIndex(FetchArchive(index_location), index_location, fetched_at);
  std::vector<FetchRequest> requests;
  std::vector<std::string> names;
  for (const auto& e : repo.index.entries) {
    if (e.urls.empty()) continue;
    requests.push_back(
        FetchRequest{ResolveLocation(index_location, e.urls.front()), e.digest});
    names.push_back(e.chart.file_name);
  }
  std::vector<std::string> bytes = FetchAll(requests, jobs);
  for (std::size_t i = 0; i < names.size(); ++i) {
    repo.archives[names[i]] = std::move(bytes[i]);
  }
  return repo;
}

std::string TakeSnapshot(const std::string& index_location,
                         SnapshotStore& store, int jobs,
                         Timestamp fetched_at) {
  if (store.Contains(FormatDate(fetched_at))) {
    throw Error(ErrorCode::kDuplicateSnapshot,
                "snapshot " + FormatDate(fetched_at) + " already recorded");
  }
  FetchedRepository repo = FetchRepository(index_location, jobs, fetched_at);
  return store.Record(repo.index, repo.archives);
}

}  // namespace chartqa
