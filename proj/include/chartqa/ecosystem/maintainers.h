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

#ifndef CHARTQA_ECOSYSTEM_MAINTAINERS_H_
#define CHARTQA_ECOSYSTEM_MAINTAINERS_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "chartqa/core/chart.h"
#include "chartqa/ingest/repo_index.h"

namespace chartqa {

// kEmail merges every record sharing a normalised e-mail; kNameEmail keeps
// (name, e-mail) pairs apart.
enum class IdentityMode { kEmail, kNameEmail };

const char* IdentityModeName(IdentityMode mode);
std::optional<IdentityMode> ParseIdentityMode(std::string_view text);

std::string NormalizeEmail(std::string_view email);  // trimmed, lowercase
std::string NormalizeName(std::string_view name);    // trimmed

struct MaintainerIdentity {
  std::string key;
  std::set<std::string> names_seen;
  std::set<std::string> emails_seen;
};

// Empty key for a record carrying neither a usable name nor e-mail.
std::string IdentityKey(const Maintainer& m, IdentityMode mode);

struct MaintainerSet {
  std::vector<std::string> members;  // identity keys, sorted
  std::vector<ChartRef> charts;      // sorted
  std::set<StemName> stems;

  int size() const { return static_cast<int>(members.size()); }
};

struct MaintainerMetrics {
  int charts = 0;
  int maintained_charts = 0;
  int unmaintained_charts = 0;
  int maintainers = 0;
  // Includes the bucket of charts without maintainers when it is non-empty.
  int sets = 0;
  double avg_charts_per_maintainer = 0;
  double avg_charts_per_set = 0;
  int max_charts_per_set = 0;
  double avg_maintainers_per_set = 0;
  int max_maintainers_per_set = 0;
  int unique_emails = 0;
};

struct MaintainerSetResult {
  std::map<std::string, MaintainerIdentity> identities;
  std::vector<MaintainerSet> sets;      // by member list
  std::vector<ChartRef> empty_bucket;   // charts without maintainers
  MaintainerMetrics metrics;
};

MaintainerSetResult ComputeMaintainerSets(
    const RepoIndex& index, IdentityMode mode = IdentityMode::kEmail);

}  // namespace chartqa

#endif  // CHARTQA_ECOSYSTEM_MAINTAINERS_H_
