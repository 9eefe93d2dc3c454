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

#ifndef CHARTQA_RENDER_BUILTIN_ENGINE_H_
#define CHARTQA_RENDER_BUILTIN_ENGINE_H_

#include <cstdint>
#include <mutex>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "chartqa/render/render.h"

namespace chartqa {

// Minimal template engine for hermetic use. Supported actions:
//
//   {{ .Values.a.b }}  {{ .Release.Name }}  {{ .Release.Namespace }}
//   {{ .Chart.Name }}  {{ .Chart.Version }}  {{/* comment */}}
//   functions: default, quote, upper, lower, randAlphaNum N
//   pipelines with "|" and trim markers "{{-" / "-}}"
//
// Anything else (control flow, includes, variables, other functions) makes
// the template fail with kEngineUnsupported rather than render wrongly.
// A value that is absent (or null) and not covered by `default` fails the
// template with kMissingValue.
struct BuiltinOptions {
  std::string release_name = "release-name";
  std::string release_namespace = "default";
  // Seeds the random functions; drawn from std::random_device when unset.
  std::optional<std::uint64_t> seed;
};

class TemplateError : public std::runtime_error {
 public:
  TemplateError(FailureCategory category, const std::string& what)
      : std::runtime_error(what), category_(category) {}
  FailureCategory category() const { return category_; }

 private:
  FailureCategory category_;
};

struct TemplateContext {
  const ValueTree* values = nullptr;
  std::string chart_name;
  std::string chart_version;
  std::string release_name;
  std::string release_namespace;
};

struct ActionSpan {
  std::size_t begin = 0;  // offset of "{{"
  std::size_t end = 0;    // one past "}}"
};

// Locates every "{{ ... }}" action, skipping braces inside string literals.
// An unclosed action extends to the end of the body.
std::vector<ActionSpan> FindTemplateActions(std::string_view body);

// Renders one template body. Throws TemplateError.
std::string ExpandTemplate(std::string_view body, const TemplateContext& ctx,
                           std::mt19937_64& rng);

class BuiltinRenderer : public Renderer {
 public:
  explicit BuiltinRenderer(BuiltinOptions options = {});

  std::string name() const override { return "builtin"; }
  RenderResult RenderTemplates(const ChartPackage& pkg,
                               const ValueTree& values) override;

 private:
  BuiltinOptions options_;
  std::mutex rng_mutex_;
  std::mt19937_64 seeder_;
};

}  // namespace chartqa

#endif  // CHARTQA_RENDER_BUILTIN_ENGINE_H_
