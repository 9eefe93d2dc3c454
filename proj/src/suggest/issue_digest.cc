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

#include "chartqa/suggest/issue_digest.h"

#include <fcntl.h>
#include <unistd.h>

#include <algorithm>
#include <cctype>
#include <map>
#include <tuple>

#include "chartqa/core/error.h"
#include "chartqa/ecosystem/maintainers.h"

namespace chartqa {
namespace fs = std::filesystem;
namespace {

using VersionKey = std::pair<std::string, std::string>;

std::string JoinNames(const std::set<std::string>& names) {
  std::string out;
  for (const auto& n : names) {
    if (!out.empty()) out += ", ";
    out += n;
  }
  return out;
}

std::string SafeFileName(const std::string& email) {
  std::string out;
  for (char c : email) {
    const bool ok = std::isalnum(static_cast<unsigned char>(c)) || c == '@' ||
                    c == '.' || c == '-' || c == '_' || c == '+';
    out.push_back(ok ? c : '_');
  }
  return out.empty() ? "_" : out;
}

}  // namespace

const char* IssueKindName(IssueKind kind) {
  switch (kind) {
    case IssueKind::kNoMaintainer:
      return "no_maintainer";
    case IssueKind::kNameCollision:
      return "name_collision";
    case IssueKind::kMultipleVersions:
      return "multiple_versions";
    case IssueKind::kAliasNames:
      return "alias_names";
    case IssueKind::kDuplicates:
      return "duplicates";
  }
  return "duplicates";
}

bool Issue::operator<(const Issue& o) const { return Key() < o.Key(); }
bool Issue::operator==(const Issue& o) const { return Key() == o.Key(); }

std::string DiffFileName(const ChartRef& chart) {
  return chart.name + "-" + chart.version + ".patch";
}

DigestBundle BuildIssueDigests(const RepoIndex& index,
                               const IrregularityReport& irregularities,
                               const std::vector<DuplicateReport>& duplicates,
                               const std::string& base_url,
                               const std::set<std::string>* linked) {
  std::map<VersionKey, std::set<std::string>> emails_of;
  std::map<VersionKey, ChartRef> chart_of;
  std::map<StemName, std::vector<ChartRef>> by_stem;
  std::map<std::string, ChartRef> first_chart_of_email;
  for (const auto& e : index.entries) {
    const VersionKey key{e.chart.name, e.chart.version};
    chart_of.emplace(key, e.chart);
    by_stem[e.chart.stem].push_back(e.chart);
    auto& emails = emails_of[key];
    for (const auto& m : e.maintainers) {
      if (!m.email) continue;
      const std::string email = NormalizeEmail(*m.email);
      if (email.empty()) continue;
      emails.insert(email);
      auto it = first_chart_of_email.find(email);
      if (it == first_chart_of_email.end() || e.chart < it->second) {
        first_chart_of_email[email] = e.chart;
      }
    }
  }

  std::map<std::string, std::set<Issue>> per_recipient;
  std::set<Issue> unaddressable;
  std::set<Issue> addressed;
  auto route = [&](const Issue& issue, const std::set<std::string>& to) {
    if (to.empty()) {
      unaddressable.insert(issue);
      return;
    }
    addressed.insert(issue);
    for (const auto& r : to) per_recipient[r].insert(issue);
  };
  auto emails_for = [&](const ChartRef& c) {
    auto it = emails_of.find({c.name, c.version});
    return it == emails_of.end() ? std::set<std::string>() : it->second;
  };

  for (const auto& c : irregularities.no_maintainer) {
    route({c, IssueKind::kNoMaintainer, "no maintainer is listed", {}}, {});
  }
  for (const auto& c : irregularities.name_collision) {
    route({c, IssueKind::kNameCollision,
           "chart name '" + c.name + "' equals a maintainer name", {}},
          emails_for(c));
  }
  for (const auto& stem : irregularities.multiple_versions) {
    auto it = by_stem.find(stem);
    if (it == by_stem.end()) continue;
    std::vector<ChartRef> charts = it->second;
    std::sort(charts.begin(), charts.end());
    std::string versions;
    std::set<std::string> to;
    for (const auto& c : charts) {
      if (!versions.empty()) versions += ", ";
      versions += c.version;
      for (const auto& e : emails_for(c)) to.insert(e);
    }
    route({charts.front(), IssueKind::kMultipleVersions,
           std::to_string(charts.size()) + " versions of " + stem.value() +
               " are listed: " + versions,
           {}},
          to);
  }
  for (const auto& alias : irregularities.alias_names) {
    auto it = first_chart_of_email.find(alias.email);
    if (it == first_chart_of_email.end()) continue;
    route({it->second, IssueKind::kAliasNames,
           alias.email + " is listed under several names: " +
               JoinNames(alias.names),
           {}},
          {alias.email});
  }
  for (const auto& report : duplicates) {
    if (report.empty()) continue;
    const VersionKey key{report.chart.name, report.chart.version};
    const ChartRef chart =
        chart_of.count(key) ? chart_of.at(key) : report.chart;
    Issue issue{chart, IssueKind::kDuplicates,
                std::to_string(report.groups.size()) +
                    " values are repeated " +
                    std::to_string(report.total_duplicate_values) +
                    " times in templates",
                {}};
    const std::string name = chart.name + "-" + chart.version;
    if (!linked || linked->count(name)) {
      std::string base = base_url;
      while (!base.empty() && base.back() == '/') base.pop_back();
      issue.diff_link = base + "/diffs/" + DiffFileName(chart);
    }
    route(issue, emails_for(chart));
  }

  DigestBundle bundle;
  for (auto& [email, issues] : per_recipient) {
    bundle.digests.push_back({email, {issues.begin(), issues.end()}});
    bundle.deliveries += static_cast<int>(issues.size());
  }
  bundle.unaddressable.issues.assign(unaddressable.begin(), unaddressable.end());
  bundle.unique_issues = static_cast<int>(addressed.size());
  if (!bundle.digests.empty()) {
    bundle.avg_issues_per_recipient =
        static_cast<double>(bundle.unique_issues) / bundle.digests.size();
  }
  return bundle;
}

std::string FormatDigestMessage(const IssueDigest& digest) {
  std::string out;
  const bool operator_copy = digest.recipient_email.empty();
  out += "To: " +
         (operator_copy ? std::string("chartqa-operator") : digest.recipient_email) +
         "\n";
  out += "Subject: [chartqa] " + std::to_string(digest.issues.size()) +
         (digest.issues.size() == 1 ? " issue" : " issues") +
         (operator_copy ? " in charts without maintainer e-mail"
                        : " in charts you maintain") +
         "\n";
  out += "Content-Type: text/plain; charset=utf-8\n\n";
  out += operator_copy
             ? "The following issues could not be routed to a maintainer.\n\n"
             : "Hello,\n\nthe following issues were found in charts that "
               "list you as maintainer.\n\n";
  for (const auto& issue : digest.issues) {
    out += "* " + issue.chart.name + " " + issue.chart.version + " [" +
           IssueKindName(issue.kind) + "] " + issue.detail + "\n";
    if (issue.diff_link) out += "  suggested change: " + *issue.diff_link + "\n";
  }
  out += "\n-- \nchartqa\n";
  return out;
}

std::vector<fs::path> WriteOutbox(const DigestBundle& bundle,
                                  const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    throw Error(ErrorCode::kStorageError, "cannot create " + dir.string());
  }
  std::vector<fs::path> written;
  auto write = [&](const IssueDigest& d, const std::string& file) {
    const fs::path p = dir / file;
    const int fd = ::open(p.c_str(), O_WRONLY | O_CREAT | O_EXCL, 0644);
    if (fd < 0) {
      throw Error(ErrorCode::kStorageError, "cannot create " + p.string());
    }
    const std::string text = FormatDigestMessage(d);
    const ssize_t n = ::write(fd, text.data(), text.size());
    ::close(fd);
    if (n != static_cast<ssize_t>(text.size())) {
      throw Error(ErrorCode::kStorageError, "short write on " + p.string());
    }
    written.push_back(p);
  };
  for (const auto& d : bundle.digests) {
    write(d, SafeFileName(d.recipient_email) + ".eml");
  }
  if (!bundle.unaddressable.issues.empty()) {
    write(bundle.unaddressable, "unaddressable.eml");
  }
  return written;
}

}  // namespace chartqa
