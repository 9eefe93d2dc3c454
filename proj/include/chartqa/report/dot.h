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

#ifndef CHARTQA_REPORT_DOT_H_
#define CHARTQA_REPORT_DOT_H_

#include <string>
#include <string_view>

#include "chartqa/ecosystem/irregularities.h"
#include "chartqa/ecosystem/maintainers.h"

namespace chartqa {

// Double-quoted DOT identifier.
std::string DotQuote(std::string_view text);

// Bipartite maintainer -> chart graph. Maintainer nodes are "m:<key>"
// ellipses, chart nodes "c:<stem>" boxes; one edge per chart version, so
// multi-version stems get parallel edges. A maintainer whose name equals
// the name of a chart it maintains is merged into that chart node, which
// turns its edges to that chart into self-loops and marks the node.
// Output is sorted and therefore deterministic.
std::string EmitDot(const MaintainerSetResult& sets,
                    const IrregularityReport& irregularities);

}  // namespace chartqa

#endif  // CHARTQA_REPORT_DOT_H_
