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

#ifndef CHARTQA_ANALYSIS_TEMPLATE_SCAN_H_
#define CHARTQA_ANALYSIS_TEMPLATE_SCAN_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chartqa/core/chart.h"
#include "chartqa/core/value_tree.h"

namespace chartqa {

// A scalar leaf of a template source, read with every directive placeholder
// neutralised: placeholders that share their line with YAML text become a
// unique sentinel token, lines consisting only of directives are dropped.
struct LiteralLeaf {
  std::string key_path;    // same grammar as FlattenDocuments()
  Scalar scalar;
  std::string canonical;
  // Byte offset in the original template of the scalar's first character
  // (the opening quote for quoted scalars); npos if it lies in a sentinel.
  std::size_t source_offset = std::string::npos;
  bool templated = false;  // value contains a sentinel
  bool is_null = false;
};

struct TemplateScan {
  std::string template_path;
  std::vector<LiteralLeaf> leaves;
  std::optional<std::string> error;  // set when the source is not YAML-shaped
};

struct SentinelText {
  std::string text;
  // Literal runs copied from the source: {source offset, text offset, size}.
  struct Run {
    std::size_t source = 0;
    std::size_t text = 0;
    std::size_t size = 0;
  };
  std::vector<Run> runs;

  std::size_t ToSource(std::size_t text_offset) const;
};

bool ContainsSentinel(std::string_view value);
SentinelText NeutraliseDirectives(std::string_view body);

TemplateScan ScanTemplate(const TemplateFile& tpl);

// Scans every renderable template of the package, in path order.
std::vector<TemplateScan> ScanPackage(const ChartPackage& pkg);

}  // namespace chartqa

#endif  // CHARTQA_ANALYSIS_TEMPLATE_SCAN_H_
