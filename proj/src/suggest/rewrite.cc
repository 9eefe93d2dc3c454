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

#include "chartqa/suggest/rewrite.h"

#include <algorithm>
#include <map>

#include "chartqa/analysis/template_scan.h"
#include "chartqa/analysis/variability.h"
#include "chartqa/core/chart_parse.h"
#include "chartqa/core/error.h"
#include "chartqa/core/log.h"
#include "chartqa/core/yaml.h"
#include "chartqa/render/flatten.h"
#include "chartqa/suggest/unified_diff.h"

namespace chartqa {
namespace {

struct LocatedLeaf {
  const TemplateFile* tpl = nullptr;
  const LiteralLeaf* leaf = nullptr;
};

// Span of the leaf's text in the source, or nothing when the source bytes
// are not a verbatim copy of the scalar.
std::optional<OccurrenceSpan> LocateLeaf(const TemplateFile& tpl,
                                         const LiteralLeaf& leaf) {
  if (leaf.is_null || leaf.templated) return std::nullopt;
  if (leaf.source_offset == std::string::npos) return std::nullopt;
  const std::string& body = tpl.body;
  const std::string& text = leaf.scalar.text;
  std::size_t begin = leaf.source_offset;
  bool quoted = leaf.scalar.style == ScalarStyle::kQuoted;
  if (quoted) {
    if (begin >= body.size()) return std::nullopt;
    const char q = body[begin];
    if (q != '"' && q != '\'') return std::nullopt;
    ++begin;
    if (begin + text.size() >= body.size()) return std::nullopt;
    if (body[begin + text.size()] != q) return std::nullopt;
  }
  if (body.compare(begin, text.size(), text) != 0) return std::nullopt;
  if (text.empty()) return std::nullopt;
  return OccurrenceSpan{tpl.path, begin, begin + text.size(), leaf.key_path,
                        quoted};
}

std::string ValuesEntry(const std::string& raw) {
  Scalar s{raw, ScalarStyle::kPlain};
  if (s.type() == ScalarType::kString && IsPlainSafe(raw)) return raw;
  return EmitScalar(Scalar{raw, ScalarStyle::kQuoted});
}

std::vector<FlatLeaf> CanonicalSet(const RenderResult& r) {
  std::vector<FlatLeaf> leaves = FlattenDocuments(r.manifests);
  std::sort(leaves.begin(), leaves.end());
  return leaves;
}

std::vector<std::string> FailedTemplates(const RenderResult& r) {
  std::vector<std::string> out;
  for (const auto& f : r.failures) out.push_back(f.template_path);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::string RewriteAssignment::Placeholder() const {
  return "{{ .Values." + var_name + " }}";
}

RewritePlan PlanRewrite(const ChartPackage& pkg, const DuplicateReport& report) {
  if (report.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty duplicate report");
  }
  if (pkg.values.Find("suggestions") != nullptr) {
    throw Error(ErrorCode::kInvalidArgument,
                pkg.metadata.name + ": values already define 'suggestions'");
  }
  const std::vector<TemplateScan> scans = ScanPackage(pkg);
  std::map<std::string, LocatedLeaf> by_path;
  for (const auto& scan : scans) {
    const TemplateFile* tpl = pkg.FindTemplate(scan.template_path);
    if (tpl == nullptr) continue;
    for (const auto& leaf : scan.leaves) by_path[leaf.key_path] = {tpl, &leaf};
  }

  std::vector<const DuplicateGroup*> groups;
  for (const auto& g : report.groups) groups.push_back(&g);
  std::stable_sort(groups.begin(), groups.end(),
                   [](const DuplicateGroup* a, const DuplicateGroup* b) {
                     if (a->count != b->count) return a->count > b->count;
                     return a->canonical_value < b->canonical_value;
                   });

  RewritePlan plan;
  plan.chart = report.chart;
  plan.chart_dir = pkg.metadata.name;
  for (const DuplicateGroup* g : groups) {
    RewriteAssignment a;
    a.value = g->canonical_value;
    bool ok = true;
    for (const auto& path : g->occurrences) {
      auto it = by_path.find(path);
      std::optional<OccurrenceSpan> span;
      if (it != by_path.end() && it->second.leaf->canonical == g->canonical_value) {
        span = LocateLeaf(*it->second.tpl, *it->second.leaf);
      }
      if (!span) {
        ok = false;
        plan.warnings.push_back(ErrorCodeName(ErrorCode::kSpanLocationFailed) +
                                std::string(": ") + g->canonical_value + " at " +
                                path);
        LogWarning(plan.warnings.back());
        break;
      }
      if (a.targets.empty()) a.raw = it->second.leaf->scalar.text;
      a.targets.push_back(*span);
    }
    if (!ok) continue;
    a.var_name =
        "suggestions.var" + std::to_string(plan.assignments.size() + 1);
    plan.assignments.push_back(std::move(a));
  }
  if (!plan.assignments.empty()) {
    plan.values_patch = "suggestions:\n";
    for (const auto& a : plan.assignments) {
      plan.values_patch += "  " + a.var_name.substr(a.var_name.find('.') + 1) +
                           ": " + ValuesEntry(a.raw) + "\n";
    }
  }
  return plan;
}

ChartPackage ApplyRewrite(const ChartPackage& pkg, const RewritePlan& plan) {
  std::map<std::string, std::string> files = pkg.files;
  std::map<std::string, std::vector<std::pair<const OccurrenceSpan*,
                                              const RewriteAssignment*>>>
      per_template;
  for (const auto& a : plan.assignments) {
    for (const auto& t : a.targets) per_template[t.template_path].push_back({&t, &a});
  }
  for (auto& [path, edits] : per_template) {
    auto it = files.find(path);
    if (it == files.end()) {
      throw Error(ErrorCode::kSpanLocationFailed, "no template " + path);
    }
    std::string& body = it->second;
    std::sort(edits.begin(), edits.end(), [](const auto& x, const auto& y) {
      return x.first->begin > y.first->begin;
    });
    std::size_t limit = body.size();
    for (const auto& [span, assignment] : edits) {
      if (span->begin >= span->end || span->end > limit) {
        throw Error(ErrorCode::kSpanLocationFailed,
                    "overlapping or out of range span in " + path);
      }
      body.replace(span->begin, span->end - span->begin,
                   assignment->Placeholder());
      limit = span->begin;
    }
  }
  if (!plan.values_patch.empty()) {
    std::string& values = files["values.yaml"];
    if (!values.empty() && values.back() != '\n') values.push_back('\n');
    values += plan.values_patch;
  }
  ChartPackage out = ParseChartFiles(std::move(files));
  return out;
}

std::string EmitDiff(const ChartPackage& pkg, const RewritePlan& plan) {
  const ChartPackage rewritten = ApplyRewrite(pkg, plan);
  const std::string a = "a/" + plan.chart_dir + "/";
  const std::string b = "b/" + plan.chart_dir + "/";
  std::string out;
  for (const auto& [path, body] : pkg.files) {
    if (path == "values.yaml") continue;
    auto it = rewritten.files.find(path);
    if (it == rewritten.files.end() || it->second == body) continue;
    out += UnifiedDiff(body, it->second, a + path, b + path);
  }
  std::optional<std::string> before;
  if (pkg.files.count("values.yaml")) before = pkg.files.at("values.yaml");
  std::optional<std::string> after;
  if (rewritten.files.count("values.yaml")) {
    after = rewritten.files.at("values.yaml");
  }
  if (before != after) {
    out += UnifiedDiff(before, after, a + "values.yaml", b + "values.yaml");
  }
  return out;
}

bool VerifyRewrite(const ChartPackage& pkg, const RewritePlan& plan,
                   const VariabilityKnowledgeBase& kb, Renderer& engine) {
  // every span must sit exactly on a literal leaf of the original source
  std::map<std::string, TemplateScan> scans;
  for (auto& scan : ScanPackage(pkg)) scans[scan.template_path] = std::move(scan);
  for (const auto& a : plan.assignments) {
    for (const auto& t : a.targets) {
      auto it = scans.find(t.template_path);
      const TemplateFile* tpl = pkg.FindTemplate(t.template_path);
      if (it == scans.end() || tpl == nullptr || it->second.error) return false;
      bool found = false;
      for (const auto& leaf : it->second.leaves) {
        auto span = LocateLeaf(*tpl, leaf);
        if (span && span->begin == t.begin && span->end == t.end &&
            leaf.canonical == a.value) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
  }

  ChartPackage rewritten;
  try {
    rewritten = ApplyRewrite(pkg, plan);
  } catch (const Error&) {
    return false;
  }
  for (auto& scan : ScanPackage(rewritten)) {
    scans[scan.template_path] = std::move(scan);
  }
  for (const auto& a : plan.assignments) {
    for (const auto& t : a.targets) {
      const TemplateScan& scan = scans[t.template_path];
      if (scan.error) return false;
      auto leaf = std::find_if(
          scan.leaves.begin(), scan.leaves.end(),
          [&](const LiteralLeaf& l) { return l.key_path == t.key_path; });
      if (leaf == scan.leaves.end() || !leaf->templated) return false;
    }
  }

  VariabilityKnowledgeBase local = kb;
  try {
    LearnVariability(pkg, local, engine);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kRenderFailed) throw;
  }
  RenderResult before, after;
  try {
    before = StabilizeRender(pkg, local, engine);
    after = StabilizeRender(rewritten, local, engine);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kRenderFailed) throw;
    return plan.assignments.empty() && pkg.templates.empty();
  }
  return CanonicalSet(before) == CanonicalSet(after) &&
         FailedTemplates(before) == FailedTemplates(after);
}

}  // namespace chartqa
