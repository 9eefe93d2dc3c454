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

#ifndef CHARTQA_CORE_YAML_H_
#define CHARTQA_CORE_YAML_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "chartqa/core/value_tree.h"

namespace YAML {
class Node;
}

namespace chartqa {

class YamlError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parses exactly one YAML document. Empty input yields a null tree; more
// than one document is an error.
ValueTree ParseYaml(std::string_view text);

ValueTree FromYamlNode(const YAML::Node& node);

// Block-style YAML for a tree. Output parses back into an equal tree
// (modulo the plain/quoted distinction of strings that need quoting).
std::string EmitYaml(const ValueTree& tree);

// Emits one scalar suitable for a block mapping value position.
std::string EmitScalar(const Scalar& scalar);

bool IsPlainSafe(std::string_view text);

struct DocumentSlice {
  std::size_t offset = 0;  // byte offset of the slice in the input
  std::string_view text;
  int index = 0;
};

// Splits a multi-document stream on "---" at column 0. A leading segment
// that holds only blanks and comments does not consume an index.
std::vector<DocumentSlice> SplitDocuments(std::string_view text);

bool IsBlankDocument(std::string_view text);

}  // namespace chartqa

#endif  // CHARTQA_CORE_YAML_H_
