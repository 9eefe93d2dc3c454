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

#ifndef CHARTQA_CORE_CHART_PARSE_H_
#define CHARTQA_CORE_CHART_PARSE_H_

#include <map>
#include <string>
#include <string_view>

#include "chartqa/core/chart.h"

namespace chartqa {

// Parses a gzipped tar with a single top-level chart directory.
// Throws Error with kMalformedArchive, kMissingMetadata or
// kMetadataParseError.
ChartPackage ParseChartArchive(std::string_view archive);

// Same contract over already-extracted files keyed by path relative to the
// chart root ("Chart.yaml", "templates/svc.yaml", ...).
ChartPackage ParseChartFiles(std::map<std::string, std::string> files);

ChartMetadata ParseChartMetadata(std::string_view chart_yaml);
std::string SerializeChartMetadata(const ChartMetadata& metadata);

// Packs a package back into "<name>/..." archive form.
std::string PackChartArchive(const ChartPackage& pkg);

}  // namespace chartqa

#endif  // CHARTQA_CORE_CHART_PARSE_H_
