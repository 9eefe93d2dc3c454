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

#include "chartqa/report/distributions.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>

namespace chartqa {
namespace {

// (maintainers, charts) -> sets
std::map<std::pair<int, int>, int> HeatmapCounts(
    const MaintainerSetResult& sets) {
  std::map<std::pair<int, int>, int> cells;
  for (const auto& s : sets.sets) {
    ++cells[{s.size(), static_cast<int>(s.charts.size())}];
  }
  if (!sets.empty_bucket.empty()) {
    ++cells[{0, static_cast<int>(sets.empty_bucket.size())}];
  }
  return cells;
}

}  // namespace

std::string CsvField(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(field);
  }
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string ToCsv(const Table& table) {
  std::string out;
  auto row = [&](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) out.push_back(',');
      out += CsvField(fields[i]);
    }
    out += "\r\n";
  };
  row(table.header);
  for (const auto& r : table.rows) row(r);
  return out;
}

std::string FormatNumber(double value) {
  if (std::isfinite(value) && value == std::floor(value) &&
      std::fabs(value) < 1e15) {
    return std::to_string(static_cast<long long>(value));
  }
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), value,
                           std::chars_format::fixed);
  return std::string(buf, res.ptr);
}

Table IssueHistogram(const DigestBundle& bundle) {
  Table t{{"issues", "recipients"}, {}};
  std::map<int, int> hist;
  for (const auto& d : bundle.digests) {
    ++hist[static_cast<int>(d.issues.size())];
  }
  for (const auto& [issues, recipients] : hist) {
    t.rows.push_back({std::to_string(issues), std::to_string(recipients)});
  }
  return t;
}

Table VariableDuplicateHistogram(const std::vector<QualityReport>& reports) {
  Table t{{"count", "variable_charts", "duplicate_charts"}, {}};
  std::map<int, std::pair<int, int>> hist;
  int max = -1;
  for (const auto& r : reports) {
    ++hist[r.variable_value_count].first;
    ++hist[r.duplicate.total_duplicate_values].second;
    max = std::max({max, r.variable_value_count,
                    r.duplicate.total_duplicate_values});
  }
  for (int k = 0; k <= max; ++k) {
    const auto it = hist.find(k);
    const auto counts = it == hist.end() ? std::pair<int, int>{0, 0} : it->second;
    t.rows.push_back({std::to_string(k), std::to_string(counts.first),
                      std::to_string(counts.second)});
  }
  return t;
}

Table MaintainerHeatmap(const MaintainerSetResult& sets) {
  const auto cells = HeatmapCounts(sets);
  int max_m = -1, max_c = 0;
  for (const auto& [key, n] : cells) {
    max_m = std::max(max_m, key.first);
    max_c = std::max(max_c, key.second);
  }
  Table t;
  t.header.push_back("maintainers");
  for (int c = 1; c <= max_c; ++c) t.header.push_back(std::to_string(c));
  const int first_row = cells.count({0, 0}) || !sets.empty_bucket.empty() ? 0 : 1;
  for (int m = first_row; m <= max_m; ++m) {
    std::vector<std::string> row{std::to_string(m)};
    for (int c = 1; c <= max_c; ++c) {
      auto it = cells.find({m, c});
      row.push_back(std::to_string(it == cells.end() ? 0 : it->second));
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table MaintainerHeatmapCells(const MaintainerSetResult& sets) {
  Table t{{"maintainers", "charts", "sets", "percentage"}, {}};
  const auto cells = HeatmapCounts(sets);
  int total = 0;
  for (const auto& [key, n] : cells) total += n;
  for (const auto& [key, n] : cells) {
    t.rows.push_back({std::to_string(key.first), std::to_string(key.second),
                      std::to_string(n),
                      FormatNumber(total ? 100.0 * n / total : 0.0)});
  }
  return t;
}

}  // namespace chartqa
