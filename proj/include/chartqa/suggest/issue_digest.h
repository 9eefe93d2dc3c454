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

#ifndef CHARTQA_SUGGEST_ISSUE_DIGEST_H_
#define CHARTQA_SUGGEST_ISSUE_DIGEST_H_

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "chartqa/analysis/duplicates.h"
#include "chartqa/ecosystem/irregularities.h"
#include "chartqa/ingest/repo_index.h"

namespace chartqa {

enum class IssueKind {
  kNoMaintainer,
  kNameCollision,
  kMultipleVersions,
  kAliasNames,
  kDuplicates,
};

const char* IssueKindName(IssueKind kind);

struct Issue {
  ChartRef chart;
  IssueKind kind = IssueKind::kDuplicates;
  std::string detail;
  std::optional<std::string> diff_link;

  auto Key() const { return std::tie(chart, kind, detail); }
  bool operator<(const Issue& o) const;
  bool operator==(const Issue& o) const;
};

struct IssueDigest {
  std::string recipient_email;  // empty for the unaddressable digest
  std::vector<Issue> issues;    // sorted
};

struct DigestBundle {
  std::vector<IssueDigest> digests;  // by recipient
  IssueDigest unaddressable;
  int unique_issues = 0;              // addressable, counted once
  int deliveries = 0;                 // issue copies over all digests
  double avg_issues_per_recipient = 0;  // unique_issues / recipients
};

// Irregularities go to the maintainers of the affected charts (aliases only
// to the e-mail concerned); duplicate reports to the chart's maintainers
// with a link to base_url/diffs/<name>-<version>.patch. A link is only
// added when linked is null or contains "<name>-<version>". Charts without
// a maintainer e-mail land in the unaddressable digest.
DigestBundle BuildIssueDigests(const RepoIndex& index,
                               const IrregularityReport& irregularities,
                               const std::vector<DuplicateReport>& duplicates,
                               const std::string& base_url,
                               const std::set<std::string>* linked = nullptr);

std::string DiffFileName(const ChartRef& chart);  // <name>-<version>.patch

std::string FormatDigestMessage(const IssueDigest& digest);

// One <recipient>.eml per digest plus unaddressable.eml when non-empty.
// Existing files are never overwritten. Throws Error(kStorageError).
std::vector<std::filesystem::path> WriteOutbox(
    const DigestBundle& bundle, const std::filesystem::path& dir);

}  // namespace chartqa

#endif  // CHARTQA_SUGGEST_ISSUE_DIGEST_H_
