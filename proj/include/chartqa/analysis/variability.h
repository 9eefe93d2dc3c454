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

#ifndef CHARTQA_ANALYSIS_VARIABILITY_H_
#define CHARTQA_ANALYSIS_VARIABILITY_H_

#include <string>
#include <vector>

#include "chartqa/analysis/knowledge_base.h"
#include "chartqa/render/render.h"

namespace chartqa {

struct LearnResult {
  std::vector<std::string> new_paths;  // sorted
  std::vector<RenderFailure> failures;  // from the first render
};

// Renders twice with the stem's overrides injected and adds every output
// path whose value differs between the renders, keeping the first value.
// Throws Error(kRenderFailed) when both renders fail entirely.
LearnResult LearnVariability(const ChartPackage& pkg,
                             VariabilityKnowledgeBase& kb, Renderer& engine);

// One render with every learned override of the stem applied.
// Throws Error(kRenderFailed) when nothing renders and failures exist.
RenderResult StabilizeRender(const ChartPackage& pkg,
                             const VariabilityKnowledgeBase& kb,
                             Renderer& engine);

}  // namespace chartqa

#endif  // CHARTQA_ANALYSIS_VARIABILITY_H_
