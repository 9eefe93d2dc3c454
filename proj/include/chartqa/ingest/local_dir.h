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

#ifndef CHARTQA_INGEST_LOCAL_DIR_H_
#define CHARTQA_INGEST_LOCAL_DIR_H_

#include <filesystem>
#include <string>
#include <vector>

#include "chartqa/core/chart.h"
#include "chartqa/core/error.h"

namespace chartqa {

struct LocalChart {
  std::filesystem::path location;
  ChartPackage package;
};

struct IngestFailure {
  std::filesystem::path location;
  ErrorCode code;
  std::string message;
};

struct IngestResult {
  std::vector<LocalChart> charts;
  std::vector<IngestFailure> failures;
};

// Reads one unpacked chart directory.
ChartPackage ReadChartDirectory(const std::filesystem::path& dir);

// Recursively discovers unpacked charts (directories holding Chart.yaml, or
// holding templates/ or values.yaml without one) and *.tgz archives. Every
// discovered location ends up either in `charts` or in `failures`. The walk
// does not descend into a chart, so bundled subcharts are not listed twice.
// A path that does not exist or cannot be read throws FetchError.
IngestResult IngestLocalDir(const std::filesystem::path& path);

}  // namespace chartqa

#endif  // CHARTQA_INGEST_LOCAL_DIR_H_
