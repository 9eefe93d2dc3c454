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

#ifndef CHARTQA_SUGGEST_REWRITE_H_
#define CHARTQA_SUGGEST_REWRITE_H_

#include <string>
#include <vector>

#include "chartqa/analysis/duplicates.h"
#include "chartqa/analysis/knowledge_base.h"
#include "chartqa/core/chart.h"
#include "chartqa/render/render.h"

namespace chartqa {

// Bytes [begin, end) of a template body. For quoted scalars the span
// covers the content between the quotes only.
struct OccurrenceSpan {
  std::string template_path;
  std::size_t begin = 0;
  std::size_t end = 0;
  std::string key_path;
  bool quoted = false;
};

struct RewriteAssignment {
  std::string var_name;  // suggestions.varN
  std::string value;     // canonical
  std::string raw;       // source text of the first occurrence
  std::vector<OccurrenceSpan> targets;

  std::string Placeholder() const;  // {{ .Values.suggestions.varN }}
};

struct RewritePlan {
  ChartRef chart;
  std::string chart_dir;  // archive top-level directory
  std::vector<RewriteAssignment> assignments;
  std::string values_patch;
  std::vector<std::string> warnings;  // groups skipped for span location

  bool empty() const { return assignments.empty(); }
};

// Groups are taken in descending count order, ties by value. A group whose
// occurrences cannot all be located as literal leaves in the sources is
// skipped with a warning and consumes no variable index.
// Throws Error(kInvalidArgument) for an empty report or when values.yaml
// already defines a top-level "suggestions" key.
RewritePlan PlanRewrite(const ChartPackage& pkg, const DuplicateReport& report);

// Throws Error(kSpanLocationFailed) when a span does not fit the package.
ChartPackage ApplyRewrite(const ChartPackage& pkg, const RewritePlan& plan);

// Unified diff with a/<chart>/ and b/<chart>/ prefixes; templates in path
// order, then values.yaml.
std::string EmitDiff(const ChartPackage& pkg, const RewritePlan& plan);

// True iff every span is a literal leaf, the rewritten templates carry the
// placeholders at the same key paths, and stabilised renders of both
// packages are canonically equal. Variable keys are learned on a copy of
// kb first.
bool VerifyRewrite(const ChartPackage& pkg, const RewritePlan& plan,
                   const VariabilityKnowledgeBase& kb, Renderer& engine);

}  // namespace chartqa

#endif  // CHARTQA_SUGGEST_REWRITE_H_
