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

#include "chartqa/analysis/variability.h"

#include <map>

#include "chartqa/core/error.h"
#include "chartqa/render/flatten.h"

namespace chartqa {
namespace {

bool FailedEntirely(const RenderResult& r) {
  return r.manifests.documents.empty() && !r.failures.empty();
}

std::map<std::string, std::string> LeafMap(const RenderedManifestSet& set) {
  std::map<std::string, std::string> out;
  for (auto& leaf : FlattenDocuments(set)) {
    out.emplace(std::move(leaf.key_path), std::move(leaf.value));
  }
  return out;
}

std::string FailureSummary(const RenderResult& r) {
  std::string out;
  for (const auto& f : r.failures) {
    if (!out.empty()) out += "; ";
    out += f.template_path + ": " + f.reason;
  }
  return out;
}

}  // namespace

LearnResult LearnVariability(const ChartPackage& pkg,
                             VariabilityKnowledgeBase& kb, Renderer& engine) {
  const StemName stem = pkg.ref().stem;
  const Overrides overrides = kb.OverridesFor(stem);
  RenderResult first = RenderChart(pkg, overrides, engine);
  RenderResult second = RenderChart(pkg, overrides, engine);
  if (FailedEntirely(first) && FailedEntirely(second)) {
    throw Error(ErrorCode::kRenderFailed,
                pkg.metadata.name + ": " + FailureSummary(first));
  }
  LearnResult result;
  result.failures = std::move(first.failures);
  const auto a = LeafMap(first.manifests);
  const auto b = LeafMap(second.manifests);
  for (const auto& [path, value] : a) {
    auto it = b.find(path);
    if (it == b.end() || it->second == value) continue;
    if (kb.Add(stem, path, value)) result.new_paths.push_back(path);
  }
  return result;
}

RenderResult StabilizeRender(const ChartPackage& pkg,
                             const VariabilityKnowledgeBase& kb,
                             Renderer& engine) {
  RenderResult r = RenderChart(pkg, kb.OverridesFor(pkg.ref().stem), engine);
  if (FailedEntirely(r)) {
    throw Error(ErrorCode::kRenderFailed,
                pkg.metadata.name + ": " + FailureSummary(r));
  }
  return r;
}

}  // namespace chartqa
