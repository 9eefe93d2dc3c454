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

#ifndef CHARTQA_SUGGEST_UNIFIED_DIFF_H_
#define CHARTQA_SUGGEST_UNIFIED_DIFF_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace chartqa {

// Lines keep their terminating '\n'; only the last may lack it.
std::vector<std::string> SplitLines(std::string_view text);

enum class EditOp { kEqual, kDelete, kInsert };

struct Edit {
  EditOp op;
  std::size_t a = 0;  // line in the old text (kEqual, kDelete)
  std::size_t b = 0;  // line in the new text (kEqual, kInsert)
};

// Shortest edit script (Myers).
std::vector<Edit> DiffLines(const std::vector<std::string>& a,
                            const std::vector<std::string>& b);

// One file section of a unified diff. A missing side is written as
// /dev/null. Returns "" when the texts are equal.
std::string UnifiedDiff(const std::optional<std::string>& before,
                        const std::optional<std::string>& after,
                        const std::string& old_label,
                        const std::string& new_label, int context = 3);

// Applies a unified diff to files keyed by path with the first component
// ("a/", "b/") removed. Absent files are created; hunks must match
// exactly at their stated positions. Throws Error(kInvalidArgument).
void ApplyUnifiedDiff(std::map<std::string, std::string>& files,
                      std::string_view diff);

}  // namespace chartqa

#endif  // CHARTQA_SUGGEST_UNIFIED_DIFF_H_
