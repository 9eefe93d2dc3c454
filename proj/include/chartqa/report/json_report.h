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

#ifndef CHARTQA_REPORT_JSON_REPORT_H_
#define CHARTQA_REPORT_JSON_REPORT_H_

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "chartqa/analysis/quality.h"
#include "chartqa/ecosystem/activity.h"
#include "chartqa/ecosystem/changes.h"
#include "chartqa/ecosystem/irregularities.h"
#include "chartqa/ecosystem/maintainers.h"
#include "chartqa/ecosystem/resampling.h"
#include "chartqa/ecosystem/trends.h"
#include "chartqa/ingest/repo_index.h"
#include "chartqa/suggest/issue_digest.h"
#include "chartqa/suggest/rewrite.h"

namespace chartqa {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchemaVersion = "1.0";

// {name, value, base_metric[, base_value, percentage][, numerator,
// denominator]}. percentage is 100 * value / base_value.
Json Metric(const std::string& name, double value,
            const std::string& base_metric,
            std::optional<double> base_value = std::nullopt,
            std::optional<double> numerator = std::nullopt,
            std::optional<double> denominator = std::nullopt);

Json ToJson(const ChartRef& chart);
Json ToJson(const RenderFailure& failure);
Json ToJson(const DuplicateReport& report);
Json ToJson(const QualityReport& report);
Json ToJson(const IrregularityReport& report);
Json ToJson(const MaintainerSetResult& result, IdentityMode mode);
Json ToJson(const ChangeSet& changes);
Json ToJson(const std::vector<ActivityProfile>& profiles);
Json ToJson(const TrendTable& table);
Json ToJson(const SnapshotSummary& summary);
Json ToJson(const RewritePlan& plan);
Json ToJson(const DigestBundle& bundle);

struct StatisticsInput {
  std::vector<double> n1;
  std::vector<double> n2;
  ResampleResult result;
};
Json ToJson(const StatisticsInput& stats);

Json QualitySummary(const std::vector<QualityReport>& reports);

class Report {
 public:
  explicit Report(std::string subject, Timestamp generated_at = NowUtc())
      : subject_(std::move(subject)), generated_at_(generated_at) {}

  void Set(const std::string& section, Json value) {
    sections_[section] = std::move(value);
  }
  Json ToJson() const;
  std::string Dump() const { return ToJson().dump(2) + "\n"; }

 private:
  std::string subject_;
  Timestamp generated_at_;
  Json sections_ = Json::object();
};

}  // namespace chartqa

#endif  // CHARTQA_REPORT_JSON_REPORT_H_
