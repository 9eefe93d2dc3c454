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

#ifndef CHARTQA_CORE_STEM_H_
#define CHARTQA_CORE_STEM_H_

#include <span>
#include <string_view>

#include "chartqa/core/chart.h"

namespace chartqa {

// Keeps the dash-separated components of a chart file name up to (not
// including) the first component that begins with a digit, and joins them
// without separator: "magic-namespace-0.1.1-2.tgz" -> "magicnamespace".
// A trailing ".tgz" is stripped first. When no component survives, the whole
// name with dashes removed is used so a stem is never empty.
StemName MangleStem(std::string_view file_name);

// (chart files - distinct stems) / distinct stems. Throws EmptyCorpus.
double VersioningOverhead(std::span<const ChartRef> charts);

}  // namespace chartqa

#endif  // CHARTQA_CORE_STEM_H_
