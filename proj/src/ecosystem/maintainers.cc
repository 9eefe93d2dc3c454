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

#include "chartqa/ecosystem/maintainers.h"

#include <algorithm>
#include <cctype>

namespace chartqa {
namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

double Ratio(int num, int den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / den;
}

}  // namespace

const char* IdentityModeName(IdentityMode mode) {
  return mode == IdentityMode::kEmail ? "email" : "name-email";
}

std::optional<IdentityMode> ParseIdentityMode(std::string_view text) {
  if (text == "email") return IdentityMode::kEmail;
  if (text == "name-email") return IdentityMode::kNameEmail;
  return std::nullopt;
}

std::string NormalizeEmail(std::string_view email) {
  std::string out(Trim(email));
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string NormalizeName(std::string_view name) {
  return std::string(Trim(name));
}

std::string IdentityKey(const Maintainer& m, IdentityMode mode) {
  const std::string email = m.email ? NormalizeEmail(*m.email) : "";
  const std::string name = m.name ? NormalizeName(*m.name) : "";
  if (mode == IdentityMode::kNameEmail) {
    if (email.empty()) return name;
    return name + " <" + email + ">";
  }
  return email.empty() ? name : email;
}

MaintainerSetResult ComputeMaintainerSets(const RepoIndex& index,
                                          IdentityMode mode) {
  MaintainerSetResult result;
  std::map<std::vector<std::string>, MaintainerSet> by_members;
  std::set<std::string> emails;

  for (const auto& entry : index.entries) {
    std::set<std::string> members;
    for (const auto& m : entry.maintainers) {
      const std::string key = IdentityKey(m, mode);
      if (key.empty()) continue;
      members.insert(key);
      auto& id = result.identities[key];
      id.key = key;
      if (m.name && !NormalizeName(*m.name).empty()) {
        id.names_seen.insert(NormalizeName(*m.name));
      }
      if (m.email && !NormalizeEmail(*m.email).empty()) {
        id.emails_seen.insert(NormalizeEmail(*m.email));
        emails.insert(NormalizeEmail(*m.email));
      }
    }
    if (members.empty()) {
      result.empty_bucket.push_back(entry.chart);
      continue;
    }
    std::vector<std::string> key(members.begin(), members.end());
    auto& set = by_members[key];
    set.members = key;
    set.charts.push_back(entry.chart);
    set.stems.insert(entry.chart.stem);
  }
  std::sort(result.empty_bucket.begin(), result.empty_bucket.end());
  for (auto& [key, set] : by_members) {
    std::sort(set.charts.begin(), set.charts.end());
    result.sets.push_back(std::move(set));
  }

  MaintainerMetrics& mm = result.metrics;
  mm.charts = static_cast<int>(index.entries.size());
  mm.unmaintained_charts = static_cast<int>(result.empty_bucket.size());
  mm.maintained_charts = mm.charts - mm.unmaintained_charts;
  mm.maintainers = static_cast<int>(result.identities.size());
  mm.unique_emails = static_cast<int>(emails.size());
  mm.sets = static_cast<int>(result.sets.size()) +
            (result.empty_bucket.empty() ? 0 : 1);
  mm.max_charts_per_set = mm.unmaintained_charts;
  for (const auto& set : result.sets) {
    mm.max_charts_per_set =
        std::max(mm.max_charts_per_set, static_cast<int>(set.charts.size()));
    mm.max_maintainers_per_set = std::max(mm.max_maintainers_per_set, set.size());
  }
  mm.avg_charts_per_maintainer = Ratio(mm.charts, mm.maintainers);
  mm.avg_charts_per_set = Ratio(mm.charts, mm.sets);
  mm.avg_maintainers_per_set = Ratio(mm.maintainers, mm.sets);
  return result;
}

}  // namespace chartqa
