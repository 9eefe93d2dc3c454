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

#include "chartqa/core/yaml.h"

#include <yaml-cpp/yaml.h>

#include <cstdio>

namespace chartqa {
namespace {

std::string KeyText(const YAML::Node& key) {
  if (key.IsScalar()) return key.Scalar();
  if (key.IsNull()) return "null";
  return YAML::Dump(key);
}

void AppendQuoted(std::string_view text, std::string& out) {
  out.push_back('"');
  for (unsigned char c : text) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\t':
        out += "\\t";
        break;
      case '\r':
        out += "\\r";
        break;
      default:
        if (c < 0x20 || c == 0x7f) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\x%02x", c);
          out += buf;
        } else {
          out.push_back(static_cast<char>(c));
        }
    }
  }
  out.push_back('"');
}

void AppendKey(const std::string& key, std::string& out) {
  if (IsPlainSafe(key) && ResolvePlainScalar(key) == ScalarType::kString) {
    out += key;
  } else {
    AppendQuoted(key, out);
  }
}

bool IsInline(const ValueTree& v) {
  return !(v.is_mapping() && !v.mapping().empty()) &&
         !(v.is_sequence() && !v.sequence().empty());
}

std::string InlineText(const ValueTree& v) {
  switch (v.kind()) {
    case ValueTree::Kind::kNull:
      return "null";
    case ValueTree::Kind::kScalar:
      return EmitScalar(v.scalar());
    case ValueTree::Kind::kSequence:
      return "[]";
    case ValueTree::Kind::kMapping:
      return "{}";
  }
  return "null";
}

void EmitNode(const ValueTree& v, int indent, std::string& out);

void EmitSequenceItem(const ValueTree& item, int indent, std::string& out) {
  const std::string pad(indent, ' ');
  if (IsInline(item)) {
    out += pad + "- " + InlineText(item) + "\n";
    return;
  }
  std::string child;
  EmitNode(item, indent + 2, child);
  out += pad + "- " + child.substr(indent + 2);
}

void EmitNode(const ValueTree& v, int indent, std::string& out) {
  const std::string pad(indent, ' ');
  if (IsInline(v)) {
    out += pad + InlineText(v) + "\n";
    return;
  }
  if (v.is_sequence()) {
    for (const auto& item : v.sequence()) EmitSequenceItem(item, indent, out);
    return;
  }
  for (const auto& [key, value] : v.mapping()) {
    out += pad;
    AppendKey(key, out);
    out += ":";
    if (IsInline(value)) {
      out += " " + InlineText(value) + "\n";
    } else {
      out += "\n";
      EmitNode(value, indent + 2, out);
    }
  }
}

}  // namespace

ValueTree FromYamlNode(const YAML::Node& node) {
  switch (node.Type()) {
    case YAML::NodeType::Undefined:
    case YAML::NodeType::Null:
      return ValueTree();
    case YAML::NodeType::Scalar:
      return ValueTree(Scalar{node.Scalar(), node.Tag() == "!"
                                                 ? ScalarStyle::kQuoted
                                                 : ScalarStyle::kPlain});
    case YAML::NodeType::Sequence: {
      ValueTree::Sequence seq;
      seq.reserve(node.size());
      for (const auto& child : node) seq.push_back(FromYamlNode(child));
      return ValueTree(std::move(seq));
    }
    case YAML::NodeType::Map: {
      ValueTree tree = ValueTree::EmptyMapping();
      for (auto it = node.begin(); it != node.end(); ++it) {
        tree.Set(KeyText(it->first), FromYamlNode(it->second));
      }
      return tree;
    }
  }
  return ValueTree();
}

ValueTree ParseYaml(std::string_view text) {
  std::vector<YAML::Node> docs;
  try {
    docs = YAML::LoadAll(std::string(text));
  } catch (const YAML::Exception& e) {
    throw YamlError(e.what());
  }
  if (docs.empty()) return ValueTree();
  if (docs.size() > 1) throw YamlError("expected a single YAML document");
  return FromYamlNode(docs.front());
}

bool IsPlainSafe(std::string_view t) {
  if (t.empty()) return false;
  if (t.front() == ' ' || t.back() == ' ' || t.back() == ':') return false;
  static constexpr std::string_view kIndicators = "?:,[]{}#&*!|>'\"%@`";
  if (kIndicators.find(t.front()) != std::string_view::npos) return false;
  if (t.front() == '-' && (t.size() == 1 || t[1] == ' ')) return false;
  if (t.find(": ") != std::string_view::npos) return false;
  if (t.find(" #") != std::string_view::npos) return false;
  for (unsigned char c : t) {
    if (c < 0x20 || c == 0x7f) return false;
  }
  return true;
}

std::string EmitScalar(const Scalar& scalar) {
  if (scalar.style == ScalarStyle::kPlain && IsPlainSafe(scalar.text)) {
    return scalar.text;
  }
  if (scalar.style == ScalarStyle::kPlain && scalar.text.empty()) return "";
  std::string out;
  AppendQuoted(scalar.text, out);
  return out;
}

std::string EmitYaml(const ValueTree& tree) {
  std::string out;
  EmitNode(tree, 0, out);
  return out;
}

bool IsBlankDocument(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    const std::size_t first = line.find_first_not_of(" \t\r");
    if (first != std::string_view::npos && line[first] != '#') {
      if (line.substr(first) != "...") return false;
    }
    pos = eol + 1;
  }
  return true;
}

std::vector<DocumentSlice> SplitDocuments(std::string_view text) {
  std::vector<std::size_t> starts{0};
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    if (line.substr(0, 3) == "---" &&
        (line.size() == 3 || line[3] == ' ' || line[3] == '\t' ||
         line[3] == '\r')) {
      starts.push_back(pos + 3);
    }
    pos = eol + 1;
  }
  std::vector<DocumentSlice> slices;
  int index = 0;
  for (std::size_t i = 0; i < starts.size(); ++i) {
    const std::size_t begin = starts[i];
    // A separator line starts 3 bytes before the recorded start.
    const std::size_t end = i + 1 < starts.size() ? starts[i + 1] - 3
                                                  : text.size();
    std::string_view body = text.substr(begin, end - begin);
    if (i == 0 && starts.size() > 1 && IsBlankDocument(body)) continue;
    slices.push_back(DocumentSlice{begin, body, index++});
  }
  return slices;
}

}  // namespace chartqa
