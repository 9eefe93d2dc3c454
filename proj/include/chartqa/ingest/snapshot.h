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

#ifndef CHARTQA_INGEST_SNAPSHOT_H_
#define CHARTQA_INGEST_SNAPSHOT_H_

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "chartqa/core/chart.h"
#include "chartqa/ingest/repo_index.h"

namespace chartqa {

// A recorded repository state. Ids are the UTC date of the index fetch.
struct Snapshot {
  std::string id;
  RepoIndex index;
  std::map<std::string, ChartPackage> packages;        // by file_name
  std::map<std::string, std::string> content_digests;  // by file_name
  std::map<std::string, std::string> package_errors;   // unparseable archives
};

// Filesystem store: <root>/<id>/{index.yaml,manifest.json,archives/*}.
// Snapshots are written to a temporary directory and renamed into place, so
// readers never observe a partial snapshot. Writers serialise on a lock file.
class SnapshotStore {
 public:
  explicit SnapshotStore(std::filesystem::path root);

  // Throws DuplicateSnapshot when a snapshot already exists for the day of
  // index.fetched_at, StorageError on IO failure.
  std::string Record(const RepoIndex& index,
                     const std::map<std::string, std::string>& archives);

  std::vector<std::string> List() const;  // sorted ascending
  bool Contains(const std::string& id) const;
  Snapshot Load(const std::string& id, bool parse_packages = true) const;
  std::string ReadArchive(const std::string& id,
                          const std::string& file_name) const;

  const std::filesystem::path& root() const { return root_; }

 private:
  std::filesystem::path root_;
};

std::string RecordSnapshot(const RepoIndex& index,
                           const std::map<std::string, std::string>& archives,
                           SnapshotStore& store);

struct FetchedRepository {
  RepoIndex index;
  std::map<std::string, std::string> archives;  // by file_name
};

// Fetches an index and the first download URL of every entry.
FetchedRepository FetchRepository(const std::string& index_location, int jobs,
                                  Timestamp fetched_at);

// Fetches an index and every archive it lists, then records the snapshot.
// A failed fetch aborts before anything is written.
std::string TakeSnapshot(const std::string& index_location,
                         SnapshotStore& store, int jobs,
                         Timestamp fetched_at);

}  // namespace chartqa

#endif  // CHARTQA_INGEST_SNAPSHOT_H_
