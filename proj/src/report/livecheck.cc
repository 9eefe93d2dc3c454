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

#include "chartqa/report/livecheck.h"

#include "chartqa/ecosystem/irregularities.h"
#include "chartqa/ingest/local_dir.h"

namespace chartqa {

LivecheckResult RunLivecheck(const std::filesystem::path& path,
                             const DuplicateConfig& config, Timestamp now) {
  LivecheckResult result;
  Report report(path.string(), now);
  Json section;
  IngestResult ingest;
  try {
    ingest = IngestLocalDir(path);
  } catch (const Error& e) {
    result.exit_code = kExitOperational;
    result.error = e.what();
  }
  if (result.exit_code == kExitClean && !ingest.failures.empty()) {
    result.exit_code = kExitOperational;
    Json failures = Json::array();
    for (const auto& f : ingest.failures) {
      failures.push_back(Json{{"location", f.location.string()},
                              {"code", ErrorCodeName(f.code)},
                              {"message", f.message}});
      if (!result.error.empty()) result.error += "; ";
      result.error += f.location.string() + ": " + f.message;
    }
    section["parse_failures"] = failures;
  }
  if (result.exit_code == kExitClean && ingest.charts.empty()) {
    result.exit_code = kExitOperational;
    result.error = "no chart found below " + path.string();
  }
  if (result.exit_code == kExitOperational) {
    section["status"] = "error";
    section["error"] = result.error;
    report.Set("livecheck", section);
    result.payload = report.ToJson();
    return result;
  }

  std::vector<ChartPackage> packages;
  Json duplicates = Json::array();
  bool findings = false;
  for (const auto& chart : ingest.charts) {
    const DuplicateReport dup = DetectDuplicates(chart.package, config);
    if (!dup.empty()) {
      findings = true;
      Json j = ToJson(dup);
      j["location"] = chart.location.string();
      duplicates.push_back(j);
    }
    packages.push_back(chart.package);
  }
  const IrregularityReport irr =
      DetectIrregularities(IndexFromPackages(packages, path.string()));
  if (irr.total() > 0) findings = true;

  result.exit_code = findings ? kExitFindings : kExitClean;
  section["status"] = findings ? "findings" : "clean";
  section["charts"] = ingest.charts.size();
  section["duplicates"] = duplicates;
  section["irregularities"] = ToJson(irr);
  report.Set("livecheck", section);
  result.payload = report.ToJson();
  return result;
}

}  // namespace chartqa
