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

#ifndef CHARTQA_REPORT_LIVECHECK_H_
#define CHARTQA_REPORT_LIVECHECK_H_

#include <filesystem>
#include <string>

#include "chartqa/analysis/duplicates.h"
#include "chartqa/report/json_report.h"

namespace chartqa {

inline constexpr int kExitClean = 0;
inline constexpr int kExitFindings = 1;
inline constexpr int kExitOperational = 2;

struct LivecheckResult {
  int exit_code = kExitClean;
  Json payload;  // full report, also for clean runs
  std::string error;  // set with kExitOperational
};

// Checks every chart below path for significant duplicates and metadata
// irregularities. Exit 0 when clean, 1 with findings, 2 when the path is
// unreadable, holds no chart, or any chart fails to parse.
LivecheckResult RunLivecheck(const std::filesystem::path& path,
                             const DuplicateConfig& config,
                             Timestamp now = NowUtc());

}  // namespace chartqa

#endif  // CHARTQA_REPORT_LIVECHECK_H_
