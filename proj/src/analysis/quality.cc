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

#include "chartqa/analysis/quality.h"

#include "chartqa/analysis/variability.h"
#include "chartqa/core/error.h"

namespace chartqa {

QualityReport AnalyzeChart(const ChartPackage& pkg,
                           const VariabilityKnowledgeBase& kb,
                           const DuplicateConfig& config, Renderer& engine) {
  QualityReport report;
  report.chart = pkg.ref();
  for (const auto& tpl : pkg.templates) {
    if (IsRenderableTemplate(tpl.path)) ++report.template_count;
  }
  report.duplicate = DetectDuplicates(pkg, config);

  VariabilityKnowledgeBase local = kb;
  try {
    report.render_failures = LearnVariability(pkg, local, engine).failures;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kRenderFailed) throw;
    report.render_failures =
        RenderChart(pkg, local.OverridesFor(report.chart.stem), engine)
            .failures;
  }
  const Overrides learned = local.OverridesFor(report.chart.stem);
  report.variable_value_count = static_cast<int>(learned.size());
  for (const auto& [path, value] : learned) {
    report.variable_paths.push_back(path);
  }
  return report;
}

}  // namespace chartqa
