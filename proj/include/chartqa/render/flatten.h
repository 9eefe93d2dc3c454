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

#ifndef CHARTQA_RENDER_FLATTEN_H_
#define CHARTQA_RENDER_FLATTEN_H_

#include <string>
#include <string_view>
#include <vector>

#include "chartqa/core/value_tree.h"
#include "chartqa/render/render.h"

namespace chartqa {

// Key path grammar, shared by rendered output and template scans:
//
//   path    := template "#" doc-index segment*
//   segment := "/" key | "[" index "]"
//
// Keys escape "~" as "~0", "/" as "~1" and "[" as "~2". A key repeated in
// the same mapping (possible in template sources) gets the suffix "~dN" for
// its N-th repetition, N >= 2.
struct FlatLeaf {
  std::string key_path;
  std::string value;  // canonical scalar text; null leaves read "null"

  bool operator==(const FlatLeaf&) const = default;
  bool operator<(const FlatLeaf& o) const {
    return key_path != o.key_path ? key_path < o.key_path : value < o.value;
  }
};

std::string EscapePathKey(std::string_view key);
std::string DocumentPath(std::string_view template_path, int doc_index);

// Depth-first scalar leaves of one tree below `prefix`.
void FlattenTree(const ValueTree& tree, const std::string& prefix,
                 std::vector<FlatLeaf>& out);

std::vector<FlatLeaf> FlattenDocuments(const RenderedManifestSet& set);

// Resolves a leaf path inside a manifest set; nullptr if absent.
ValueTree* FindLeaf(RenderedManifestSet& set, const std::string& key_path);

}  // namespace chartqa

#endif  // CHARTQA_RENDER_FLATTEN_H_
