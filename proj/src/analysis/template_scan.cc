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

#include "chartqa/analysis/template_scan.h"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <map>

#include "chartqa/core/yaml.h"
#include "chartqa/render/builtin_engine.h"
#include "chartqa/render/flatten.h"
#include "chartqa/render/render.h"

namespace chartqa {
namespace {

constexpr std::string_view kSentinelPrefix = "__chartqa_sentinel_";

std::string Sentinel(std::size_t n) {
  return std::string(kSentinelPrefix) + std::to_string(n) + "__";
}

// Marks the lines whose only non-blank content is directives.
std::vector<bool> DirectiveOnlyActions(std::string_view body,
                                       const std::vector<ActionSpan>& spans) {
  std::vector<bool> covered(body.size(), false);
  for (const auto& s : spans) {
    std::fill(covered.begin() + s.begin, covered.begin() + s.end, true);
  }
  // line_ok[i]: the line containing byte i holds nothing but blanks and
  // directive text.
  std::vector<bool> line_ok(body.size(), true);
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t eol = body.find('\n', start);
    if (eol == std::string_view::npos) eol = body.size();
    bool ok = true;
    for (std::size_t i = start; i < eol; ++i) {
      const char c = body[i];
      if (!covered[i] && c != ' ' && c != '\t' && c != '\r') {
        ok = false;
        break;
      }
    }
    for (std::size_t i = start; i < eol; ++i) line_ok[i] = ok;
    if (eol == body.size()) break;
    start = eol + 1;
  }
  std::vector<bool> standalone;
  for (const auto& s : spans) {
    bool all = true;
    for (std::size_t i = s.begin; i < s.end && all; ++i) all = line_ok[i];
    standalone.push_back(all);
  }
  return standalone;
}

struct Walker {
  const SentinelText& sentinel;
  std::size_t slice_offset;
  std::vector<LiteralLeaf>& out;

  void Leaf(const YAML::Node& node, const std::string& path) {
    LiteralLeaf leaf;
    leaf.key_path = path;
    if (node.IsNull() || !node.IsDefined()) {
      leaf.is_null = true;
      leaf.canonical = "null";
    } else {
      leaf.scalar = Scalar{node.Scalar(), node.Tag() == "!"
                                             ? ScalarStyle::kQuoted
                                             : ScalarStyle::kPlain};
      leaf.canonical = leaf.scalar.Canonical();
      leaf.templated = ContainsSentinel(leaf.scalar.text);
      const YAML::Mark mark = node.Mark();
      if (mark.pos >= 0) {
        leaf.source_offset =
            sentinel.ToSource(slice_offset + static_cast<std::size_t>(mark.pos));
      }
    }
    out.push_back(std::move(leaf));
  }

  void Walk(const YAML::Node& node, const std::string& path) {
    if (node.IsSequence()) {
      std::size_t i = 0;
      for (const auto& child : node) {
        Walk(child, path + "[" + std::to_string(i++) + "]");
      }
    } else if (node.IsMap()) {
      std::map<std::string, int> seen;
      for (auto it = node.begin(); it != node.end(); ++it) {
        std::string key = it->first.IsScalar() ? it->first.Scalar()
                                               : YAML::Dump(it->first);
        std::string segment = EscapePathKey(key);
        const int n = ++seen[segment];
        if (n > 1) segment += "~d" + std::to_string(n);
        Walk(it->second, path + "/" + segment);
      }
    } else {
      Leaf(node, path);
    }
  }
};

}  // namespace

std::size_t SentinelText::ToSource(std::size_t text_offset) const {
  auto it = std::upper_bound(
      runs.begin(), runs.end(), text_offset,
      [](std::size_t off, const Run& r) { return off < r.text; });
  if (it == runs.begin()) return std::string::npos;
  --it;
  if (text_offset >= it->text + it->size) return std::string::npos;
  return it->source + (text_offset - it->text);
}

bool ContainsSentinel(std::string_view value) {
  return value.find(kSentinelPrefix) != std::string_view::npos;
}

SentinelText NeutraliseDirectives(std::string_view body) {
  const std::vector<ActionSpan> spans = FindTemplateActions(body);
  const std::vector<bool> standalone = DirectiveOnlyActions(body, spans);
  SentinelText out;
  std::size_t pos = 0;
  auto copy = [&](std::size_t from, std::size_t to) {
    if (to <= from) return;
    out.runs.push_back(SentinelText::Run{from, out.text.size(), to - from});
    out.text.append(body.substr(from, to - from));
  };
  for (std::size_t i = 0; i < spans.size(); ++i) {
    copy(pos, spans[i].begin);
    if (!standalone[i]) out.text += Sentinel(i);
    pos = spans[i].end;
  }
  copy(pos, body.size());
  return out;
}

TemplateScan ScanTemplate(const TemplateFile& tpl) {
  TemplateScan scan;
  scan.template_path = tpl.path;
  const SentinelText sentinel = NeutraliseDirectives(tpl.body);
  std::vector<LiteralLeaf> leaves;
  try {
    for (const auto& slice : SplitDocuments(sentinel.text)) {
      if (IsBlankDocument(slice.text)) continue;
      const YAML::Node root = YAML::Load(std::string(slice.text));
      if (root.IsNull()) continue;
      Walker walker{sentinel, slice.offset, leaves};
      walker.Walk(root, DocumentPath(tpl.path, slice.index));
    }
  } catch (const YAML::Exception& e) {
    scan.error = e.what();
    return scan;
  }
  scan.leaves = std::move(leaves);
  return scan;
}

std::vector<TemplateScan> ScanPackage(const ChartPackage& pkg) {
  std::vector<TemplateScan> scans;
  for (const auto& tpl : pkg.templates) {
    if (!IsRenderableTemplate(tpl.path)) continue;
    scans.push_back(ScanTemplate(tpl));
  }
  return scans;
}

}  // namespace chartqa
