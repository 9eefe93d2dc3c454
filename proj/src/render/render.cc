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

#include "chartqa/render/render.h"

#include "chartqa/core/yaml.h"
#include "chartqa/render/flatten.h"

namespace chartqa {

const char* FailureCategoryName(FailureCategory category) {
  switch (category) {
    case FailureCategory::kMissingValue:
      return "MissingValue";
    case FailureCategory::kSyntaxError:
      return "SyntaxError";
    case FailureCategory::kEngineUnsupported:
      return "EngineUnsupported";
  }
  return "Unknown";
}

bool IsOutputOverride(const std::string& key) {
  return key.find('#') != std::string::npos;
}

bool IsRenderableTemplate(const std::string& path) {
  if (path.rfind("templates/", 0) != 0) return false;
  const std::size_t slash = path.find_last_of('/');
  const std::string base = path.substr(slash + 1);
  if (base.empty() || base[0] == '_') return false;
  const std::size_t dot = base.find_last_of('.');
  if (dot == std::string::npos) return false;
  const std::string ext = base.substr(dot);
  return ext == ".yaml" || ext == ".yml";
}

bool ParseRenderedTemplate(const std::string& template_path,
                           std::string_view text, RenderResult& out) {
  std::vector<RenderedDocument> docs;
  for (const auto& slice : SplitDocuments(text)) {
    if (IsBlankDocument(slice.text)) continue;
    try {
      ValueTree body = ParseYaml(slice.text);
      if (body.is_null()) continue;
      docs.push_back(RenderedDocument{template_path, slice.index, std::move(body)});
    } catch (const YamlError& e) {
      out.failures.push_back(RenderFailure{
          template_path, "document " + std::to_string(slice.index) + ": " + e.what(),
          FailureCategory::kSyntaxError});
      return false;
    }
  }
  for (auto& d : docs) out.manifests.documents.push_back(std::move(d));
  return true;
}

RenderResult RenderChart(const ChartPackage& pkg, const Overrides& overrides,
                         Renderer& engine) {
  ValueTree values = pkg.values;
  std::map<std::string, std::string> used;
  for (const auto& [key, value] : overrides) {
    if (IsOutputOverride(key)) continue;
    values.SetPath(key, ValueTree(ScalarFromCanonical(value)));
    used[key] = value;
  }
  RenderResult result = engine.RenderTemplates(pkg, values);
  for (const auto& [key, value] : overrides) {
    if (!IsOutputOverride(key)) continue;
    ValueTree* leaf = FindLeaf(result.manifests, key);
    if (leaf == nullptr || leaf->is_mapping() || leaf->is_sequence()) continue;
    *leaf = ValueTree(ScalarFromCanonical(value));
    used[key] = value;
  }
  result.manifests.render_overrides_used = std::move(used);
  return result;
}

std::string SerializeManifests(const RenderedManifestSet& set) {
  std::string out;
  for (const auto& doc : set.documents) {
    out += "---\n# Source: " + DocumentPath(doc.template_path, doc.doc_index) +
           "\n";
    out += EmitYaml(doc.body);
  }
  return out;
}

}  // namespace chartqa
