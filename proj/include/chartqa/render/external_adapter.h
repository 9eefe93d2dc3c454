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

#ifndef CHARTQA_RENDER_EXTERNAL_ADAPTER_H_
#define CHARTQA_RENDER_EXTERNAL_ADAPTER_H_

#include <memory>
#include <semaphore>
#include <string>

#include "chartqa/render/render.h"

namespace chartqa {

// Delegates rendering to the platform chart tool ("<bin> template <dir>").
// The package is materialised in a temporary directory with the effective
// values written to values.yaml; the multi-document output is split on
// "# Source:" markers. A non-zero exit becomes RenderFailure records parsed
// from the error text.
class ExternalRenderer : public Renderer {
 public:
  // Throws EngineUnavailable if `binary` cannot be found.
  explicit ExternalRenderer(std::string binary, int max_parallel = 4);

  std::string name() const override { return "external"; }
  RenderResult RenderTemplates(const ChartPackage& pkg,
                               const ValueTree& values) override;

  const std::string& binary() const { return binary_; }

 private:
  std::string binary_;
  std::unique_ptr<std::counting_semaphore<>> slots_;
};

// Parses the tool's stdout into documents (exposed for tests).
void ParseExternalOutput(std::string_view out, RenderResult& result);
// Maps the tool's error text onto failure records (exposed for tests).
std::vector<RenderFailure> ParseExternalErrors(std::string_view err);

}  // namespace chartqa

#endif  // CHARTQA_RENDER_EXTERNAL_ADAPTER_H_
