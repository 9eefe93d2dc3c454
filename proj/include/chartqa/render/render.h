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

#ifndef CHARTQA_RENDER_RENDER_H_
#define CHARTQA_RENDER_RENDER_H_

#include <map>
#include <string>
#include <vector>

#include "chartqa/core/chart.h"
#include "chartqa/core/value_tree.h"

namespace chartqa {

struct RenderedDocument {
  std::string template_path;
  int doc_index = 0;
  ValueTree body;
};

struct RenderedManifestSet {
  std::vector<RenderedDocument> documents;
  std::map<std::string, std::string> render_overrides_used;
};

enum class FailureCategory { kMissingValue, kSyntaxError, kEngineUnsupported };

const char* FailureCategoryName(FailureCategory category);

struct RenderFailure {
  std::string template_path;
  std::string reason;
  FailureCategory category = FailureCategory::kSyntaxError;
};

struct RenderResult {
  RenderedManifestSet manifests;
  std::vector<RenderFailure> failures;
};

// Override keys come in two forms. Keys containing '#' address a flattened
// output leaf ("templates/secret.yaml#0/data/password") and are injected into
// the rendered documents afterwards; any other key is a dotted values path
// ("image.tag") that takes precedence over values.yaml.
using Overrides = std::map<std::string, std::string>;

bool IsOutputOverride(const std::string& key);

// A template engine. Implementations render every renderable template of
// the package against `values` and collect failures per template.
class Renderer {
 public:
  virtual ~Renderer() = default;
  virtual std::string name() const = 0;
  virtual RenderResult RenderTemplates(const ChartPackage& pkg,
                                       const ValueTree& values) = 0;
};

RenderResult RenderChart(const ChartPackage& pkg, const Overrides& overrides,
                         Renderer& engine);

// Deterministic text form of a manifest set; the unit of byte comparison.
std::string SerializeManifests(const RenderedManifestSet& set);

// Parses rendered text of one template into documents, appending to `out`.
// Returns false (and records a failure) if any document is not valid YAML.
bool ParseRenderedTemplate(const std::string& template_path,
                           std::string_view text, RenderResult& out);

bool IsRenderableTemplate(const std::string& path);

}  // namespace chartqa

#endif  // CHARTQA_RENDER_RENDER_H_
