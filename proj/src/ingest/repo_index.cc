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

#include "chartqa/ingest/repo_index.h"

#include <yaml-cpp/yaml.h>

#include <cstdio>

#include "chartqa/core/error.h"

namespace chartqa {
namespace {

std::optional<std::string> Text(const YAML::Node& node, const char* key) {
  const YAML::Node child = node[key];
  if (!child || !child.IsScalar()) return std::nullopt;
  return child.Scalar();
}

std::string UrlFileName(const std::string& url) {
  std::string path = url.substr(0, url.find_first_of("?#"));
  const std::size_t slash = path.find_last_of('/');
  return slash == std::string::npos ? path : path.substr(slash + 1);
}

}  // namespace

RepoIndex ParseRepoIndex(std::string_view raw, std::string source,
                         Timestamp fetched_at) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(raw));
  } catch (const YAML::Exception& e) {
    throw Error(ErrorCode::kIndexParseError, e.what());
  }
  if (!root.IsMap()) {
    throw Error(ErrorCode::kIndexParseError, "index is not a mapping");
  }
  const YAML::Node entries = root["entries"];
  if (!entries || entries.IsNull() ||
      (entries.IsMap() && entries.size() == 0)) {
    throw Error(ErrorCode::kEmptyIndex, "index has no entries");
  }
  if (!entries.IsMap()) {
    throw Error(ErrorCode::kIndexParseError, "entries is not a mapping");
  }

  RepoIndex index;
  index.source = std::move(source);
  index.fetched_at = fetched_at;
  index.raw = std::string(raw);
  for (auto it = entries.begin(); it != entries.end(); ++it) {
    const std::string app = it->first.Scalar();
    if (!it->second.IsSequence()) {
      throw Error(ErrorCode::kIndexParseError,
                  "entries." + app + " is not a list of versions");
    }
    for (const auto& record : it->second) {
      if (!record.IsMap()) {
        throw Error(ErrorCode::kIndexParseError,
                    "entries." + app + " holds a non-mapping record");
      }
      IndexEntry entry;
      const std::string name = Text(record, "name").value_or(app);
      const auto version = Text(record, "version");
      if (!version) {
        throw Error(ErrorCode::kIndexParseError,
                    "record of " + app + " lacks a version");
      }
      const YAML::Node urls = record["urls"];
      if (urls && urls.IsSequence()) {
        for (const auto& u : urls) {
          if (u.IsScalar()) entry.urls.push_back(u.Scalar());
        }
      }
      std::string file_name = entry.urls.empty()
                                  ? name + "-" + *version + ".tgz"
                                  : UrlFileName(entry.urls.front());
      if (file_name.size() < 4 ||
          file_name.substr(file_name.size() - 4) != ".tgz") {
        file_name = name + "-" + *version + ".tgz";
      }
      entry.chart = ChartRef::FromFile(name, *version, file_name);
      entry.digest = Text(record, "digest");
      const YAML::Node maintainers = record["maintainers"];
      if (maintainers && maintainers.IsSequence()) {
        for (const auto& m : maintainers) {
          if (!m.IsMap()) continue;
          entry.maintainers.push_back(
              Maintainer{Text(m, "name"), Text(m, "email")});
        }
      }
      index.entries.push_back(std::move(entry));
    }
  }
  if (index.entries.empty()) {
    throw Error(ErrorCode::kEmptyIndex, "index has no version records");
  }
  return index;
}

RepoIndex IndexFromPackages(const std::vector<ChartPackage>& packages,
                            std::string source) {
  RepoIndex index;
  index.source = std::move(source);
  index.fetched_at = NowUtc();
  for (const auto& pkg : packages) {
    IndexEntry entry;
    entry.chart = pkg.ref();
    entry.maintainers = pkg.metadata.maintainers;
    index.entries.push_back(std::move(entry));
  }
  return index;
}

Timestamp NowUtc() {
  return std::chrono::floor<std::chrono::seconds>(
      std::chrono::system_clock::now());
}

std::string FormatTimestamp(Timestamp t) {
  const auto days = std::chrono::floor<std::chrono::days>(t);
  const std::chrono::year_month_day ymd{days};
  const std::chrono::hh_mm_ss hms{t - days};
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02uT%02ld:%02ld:%02ldZ",
                static_cast<int>(ymd.year()), static_cast<unsigned>(ymd.month()),
                static_cast<unsigned>(ymd.day()),
                static_cast<long>(hms.hours().count() % 24),
                static_cast<long>(hms.minutes().count() % 60),
                static_cast<long>(hms.seconds().count() % 60));
  return buf;
}

std::string FormatDate(Timestamp t) { return FormatTimestamp(t).substr(0, 10); }

Timestamp ParseTimestamp(std::string_view text) {
  int y = 0;
  unsigned mo = 0, d = 0, h = 0, mi = 0, s = 0;
  const std::string str(text);
  const int n = std::sscanf(str.c_str(), "%d-%u-%uT%u:%u:%u", &y, &mo, &d, &h,
                            &mi, &s);
  if (n != 3 && n != 6) {
    throw Error(ErrorCode::kInvalidArgument, "bad timestamp: " + str);
  }
  const std::chrono::year_month_day ymd{std::chrono::year{y},
                                        std::chrono::month{mo},
                                        std::chrono::day{d}};
  if (!ymd.ok()) throw Error(ErrorCode::kInvalidArgument, "bad date: " + str);
  return std::chrono::sys_days{ymd} + std::chrono::hours{h} +
         std::chrono::minutes{mi} + std::chrono::seconds{s};
}

}  // namespace chartqa
