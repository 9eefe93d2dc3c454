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

#include "corpus.h"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "chartqa/core/chart_parse.h"
#include "chartqa/core/error.h"
#include "chartqa/core/log.h"
#include "chartqa/ingest/fetch.h"
#include "chartqa/ingest/local_dir.h"
#include "chartqa/ingest/snapshot.h"

namespace chartqa::cli {

Corpus LoadCorpus(const SourceOptions& options, bool with_packages) {
  const int sources = !options.path.empty() + !options.index.empty() +
                      !options.store.empty();
  if (sources != 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "give exactly one of --path, --index, --snapshot-store");
  }
  Corpus corpus;
  if (!options.path.empty()) {
    corpus.subject = options.path;
    IngestResult ingest = IngestLocalDir(options.path);
    for (auto& c : ingest.charts) corpus.packages.push_back(std::move(c.package));
    for (const auto& f : ingest.failures) {
      corpus.failures.emplace_back(f.location.string(), f.message);
    }
    corpus.index = IndexFromPackages(corpus.packages, options.path);
    return corpus;
  }
  if (!options.index.empty()) {
    corpus.subject = options.index;
    if (!with_packages) {
      corpus.index = ParseRepoIndex(FetchArchive(options.index), options.index,
                                    NowUtc());
      return corpus;
    }
    FetchedRepository repo = FetchRepository(options.index, options.jobs, NowUtc());
    corpus.index = std::move(repo.index);
    for (const auto& [name, bytes] : repo.archives) {
      try {
        corpus.packages.push_back(ParseChartArchive(bytes));
      } catch (const Error& e) {
        corpus.failures.emplace_back(name, e.what());
      }
    }
    return corpus;
  }
  SnapshotStore store(options.store);
  std::string id = options.snapshot;
  if (id.empty()) {
    const auto ids = store.List();
    if (ids.empty()) {
      throw Error(ErrorCode::kStorageError, "snapshot store is empty");
    }
    id = ids.back();
  }
  Snapshot snap = store.Load(id, with_packages);
  corpus.subject = options.store + "#" + id;
  corpus.index = std::move(snap.index);
  for (auto& [name, pkg] : snap.packages) corpus.packages.push_back(std::move(pkg));
  for (const auto& [name, why] : snap.package_errors) {
    corpus.failures.emplace_back(name, why);
  }
  return corpus;
}

void ParallelFor(std::size_t n, int jobs,
                 const std::function<void(std::size_t)>& fn) {
  const std::size_t workers =
      std::min<std::size_t>(n, static_cast<std::size_t>(std::max(jobs, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= n) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          next.store(n);
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace chartqa::cli
