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

#ifndef CHARTQA_REPORT_DISTRIBUTIONS_H_
#define CHARTQA_REPORT_DISTRIBUTIONS_H_

#include <string>
#include <string_view>
#include <vector>

#include "chartqa/analysis/quality.h"
#include "chartqa/ecosystem/maintainers.h"
#include "chartqa/suggest/issue_digest.h"

namespace chartqa {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

// RFC 4180: CRLF records, fields quoted when they hold a comma, quote,
// CR or LF, quotes doubled.
std::string CsvField(std::string_view field);
std::string ToCsv(const Table& table);

// Plain decimal, no exponent, no thousands separator.
std::string FormatNumber(double value);

// issues,recipients: e-mail addresses per number of issues.
Table IssueHistogram(const DigestBundle& bundle);

// count,variable_charts,duplicate_charts: charts whose variable value
// count (resp. total duplicate values) equals count, for 0..max.
Table VariableDuplicateHistogram(const std::vector<QualityReport>& reports);

// Matrix of set counts: one row per maintainer count (0 for the bucket of
// charts without maintainers), one column per chart count.
Table MaintainerHeatmap(const MaintainerSetResult& sets);

// Long form of the same: maintainers,charts,sets,percentage.
Table MaintainerHeatmapCells(const MaintainerSetResult& sets);

}  // namespace chartqa

#endif  // CHARTQA_REPORT_DISTRIBUTIONS_H_
