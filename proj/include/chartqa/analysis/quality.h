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

#ifndef CHARTQA_ANALYSIS_QUALITY_H_
#define CHARTQA_ANALYSIS_QUALITY_H_

#include <string>
#include <vector>

#include "chartqa/analysis/duplicates.h"
#include "chartqa/analysis/knowledge_base.h"
#include "chartqa/render/render.h"

namespace chartqa {

struct QualityReport {
  ChartRef chart;
  int variable_value_count = 0;
  std::vector<std::string> variable_paths;
  DuplicateReport duplicate;
  std::vector<RenderFailure> render_failures;
  int template_count = 0;  // renderable templates

  bool has_variable_values() const { return variable_value_count > 0; }
  bool has_duplicates() const { return !duplicate.empty(); }
};

// Learns against a private copy of kb; the caller's base is not modified.
// A chart that does not render at all still gets a report, with the
// failures listed and no variable values.
QualityReport AnalyzeChart(const ChartPackage& pkg,
                           const VariabilityKnowledgeBase& kb,
                           const DuplicateConfig& config, Renderer& engine);

}  // namespace chartqa

#endif  // CHARTQA_ANALYSIS_QUALITY_H_
