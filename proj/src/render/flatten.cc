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

#include "chartqa/render/flatten.h"

#include <cstdlib>

namespace chartqa {

std::string EscapePathKey(std::string_view key) {
  std::string out;
  out.reserve(key.size());
  for (char c : key) {
    switch (c) {
      case '~':
        out += "~0";
        break;
      case '/':
        out += "~1";
        break;
      case '[':
        out += "~2";
        break;
      default:
        out.push_back(c);
    }
  }
  return out;
}

std::string DocumentPath(std::string_view template_path, int doc_index) {
  return std::string(template_path) + "#" + std::to_string(doc_index);
}

void FlattenTree(const ValueTree& tree, const std::string& prefix,
                 std::vector<FlatLeaf>& out) {
  switch (tree.kind()) {
    case ValueTree::Kind::kNull:
      out.push_back(FlatLeaf{prefix, "null"});
      break;
    case ValueTree::Kind::kScalar:
      out.push_back(FlatLeaf{prefix, tree.scalar().Canonical()});
      break;
    case ValueTree::Kind::kSequence: {
      const auto& seq = tree.sequence();
      for (std::size_t i = 0; i < seq.size(); ++i) {
        FlattenTree(seq[i], prefix + "[" + std::to_string(i) + "]", out);
      }
      break;
    }
    case ValueTree::Kind::kMapping:
      for (const auto& [key, value] : tree.mapping()) {
        FlattenTree(value, prefix + "/" + EscapePathKey(key), out);
      }
      break;
  }
}

std::vector<FlatLeaf> FlattenDocuments(const RenderedManifestSet& set) {
  std::vector<FlatLeaf> out;
  for (const auto& doc : set.documents) {
    FlattenTree(doc.body, DocumentPath(doc.template_path, doc.doc_index), out);
  }
  return out;
}

ValueTree* FindLeaf(RenderedManifestSet& set, const std::string& key_path) {
  const std::size_t hash = key_path.find('#');
  if (hash == std::string::npos) return nullptr;
  const std::string tpl = key_path.substr(0, hash);
  std::size_t pos = hash + 1;
  std::size_t end = key_path.find_first_of("/[", pos);
  if (end == std::string::npos) end = key_path.size();
  const int doc_index = std::atoi(key_path.substr(pos, end - pos).c_str());
  ValueTree* node = nullptr;
  for (auto& doc : set.documents) {
    if (doc.template_path == tpl && doc.doc_index == doc_index) {
      node = &doc.body;
      break;
    }
  }
  pos = end;
  while (node != nullptr && pos < key_path.size()) {
    if (key_path[pos] == '[') {
      const std::size_t close = key_path.find(']', pos);
      if (close == std::string::npos || !node->is_sequence()) return nullptr;
      const std::size_t i =
          std::strtoul(key_path.substr(pos + 1, close - pos - 1).c_str(),
                       nullptr, 10);
      if (i >= node->sequence().size()) return nullptr;
      node = &node->sequence()[i];
      pos = close + 1;
    } else {
      std::size_t next = key_path.find_first_of("/[", pos + 1);
      if (next == std::string::npos) next = key_path.size();
      const std::string segment = key_path.substr(pos + 1, next - pos - 1);
      if (!node->is_mapping()) return nullptr;
      ValueTree* child = nullptr;
      for (auto& [key, value] : node->mapping()) {
        if (EscapePathKey(key) == segment) {
          child = &value;
          break;
        }
      }
      node = child;
      pos = next;
    }
  }
  return node;
}

}  // namespace chartqa
