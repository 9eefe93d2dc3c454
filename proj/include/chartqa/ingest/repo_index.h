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

#ifndef CHARTQA_INGEST_REPO_INDEX_H_
#define CHARTQA_INGEST_REPO_INDEX_H_

#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chartqa/core/chart.h"

namespace chartqa {

using Timestamp = std::chrono::sys_seconds;

struct IndexEntry {
  ChartRef chart;
  std::vector<Maintainer> maintainers;
  std::vector<std::string> urls;
  std::optional<std::string> digest;
};

// A parsed repository index. Several entries may share a stem; that is the
// "multiple versions" irregularity, not a parse error.
struct RepoIndex {
  std::string source;
  Timestamp fetched_at{};
  std::vector<IndexEntry> entries;
  std::string raw;  // bytes as fetched, kept for snapshot replay
};

// Parses an index.yaml ("apiVersion" + "entries: {name: [records]}").
// Throws IndexParseError or EmptyIndex.
RepoIndex ParseRepoIndex(std::string_view raw, std::string source,
                         Timestamp fetched_at = Timestamp{});

// Builds an in-memory index from already parsed packages, e.g. for a local
// directory under livecheck.
RepoIndex IndexFromPackages(const std::vector<ChartPackage>& packages,
                            std::string source);

Timestamp NowUtc();
std::string FormatTimestamp(Timestamp t);   // 2018-05-15T00:00:00Z
std::string FormatDate(Timestamp t);        // 2018-05-15
Timestamp ParseTimestamp(std::string_view text);  // accepts both forms

}  // namespace chartqa

#endif  // CHARTQA_INGEST_REPO_INDEX_H_
