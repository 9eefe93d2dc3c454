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

#include "chartqa/render/external_adapter.h"

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <regex>

#include "chartqa/core/error.h"
#include "chartqa/core/yaml.h"
#include "chartqa/render/process.h"

namespace chartqa {
namespace fs = std::filesystem;

namespace {

class TempDir {
 public:
  TempDir() {
    std::string pattern =
        (fs::temp_directory_path() / "chartqa-render-XXXXXX").string();
    if (::mkdtemp(pattern.data()) == nullptr) {
      throw Error(ErrorCode::kStorageError, "cannot create temp directory");
    }
    path_ = pattern;
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

void Materialise(const ChartPackage& pkg, const ValueTree& values,
                 const fs::path& dir) {
  std::map<std::string, std::string> files = pkg.files;
  files["values.yaml"] = EmitYaml(values);
  for (const auto& [rel, data] : files) {
    const fs::path target = dir / rel;
    fs::create_directories(target.parent_path());
    std::ofstream out(target, std::ios::binary);
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!out) throw Error(ErrorCode::kStorageError, "cannot write " + target.string());
  }
}

class SlotGuard {
 public:
  explicit SlotGuard(std::counting_semaphore<>& s) : s_(s) { s_.acquire(); }
  ~SlotGuard() { s_.release(); }

 private:
  std::counting_semaphore<>& s_;
};

}  // namespace

ExternalRenderer::ExternalRenderer(std::string binary, int max_parallel)
    : binary_(FindExecutable(binary)),
      slots_(std::make_unique<std::counting_semaphore<>>(
          std::max(1, max_parallel))) {
  if (binary_.empty()) {
    throw Error(ErrorCode::kEngineUnavailable,
                "renderer binary not found: " + binary);
  }
}

void ParseExternalOutput(std::string_view out, RenderResult& result) {
  static const std::regex kSource(R"((^|\n)# Source: ([^\r\n]+))");
  std::map<std::string, int> per_template;
  for (const auto& slice : SplitDocuments(out)) {
    const std::string text(slice.text);
    std::string tpl;
    std::smatch sm;
    if (std::regex_search(text, sm, kSource)) {
      tpl = sm[2].str();
      const std::size_t slash = tpl.find('/');
      if (slash != std::string::npos) tpl = tpl.substr(slash + 1);
    }
    if (tpl.empty() || IsBlankDocument(slice.text)) continue;
    const int index = per_template[tpl]++;
    try {
      ValueTree body = ParseYaml(slice.text);
      if (body.is_null()) continue;
      result.manifests.documents.push_back(
          RenderedDocument{tpl, index, std::move(body)});
    } catch (const YamlError& e) {
      result.failures.push_back(
          RenderFailure{tpl, e.what(), FailureCategory::kSyntaxError});
    }
  }
}

std::vector<RenderFailure> ParseExternalErrors(std::string_view err) {
  std::vector<RenderFailure> failures;
  static const std::regex kPath(R"((templates/[^:"\s]+))");
  std::string text(err);
  std::string line;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = text.size();
    line = text.substr(pos, eol - pos);
    pos = eol + 1;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::smatch m;
    const std::string tpl =
        std::regex_search(line, m, kPath) ? m[1].str() : std::string();
    FailureCategory category = FailureCategory::kSyntaxError;
    for (const char* marker : {"nil pointer", "required", "no value",
                               "map has no entry", "missing"}) {
      if (line.find(marker) != std::string::npos) {
        category = FailureCategory::kMissingValue;
      }
    }
    if (line.find("function \"") != std::string::npos &&
        line.find("not defined") != std::string::npos) {
      category = FailureCategory::kEngineUnsupported;
    }
    failures.push_back(RenderFailure{tpl, line, category});
  }
  if (failures.empty()) {
    failures.push_back(RenderFailure{"", "renderer failed without output",
                                     FailureCategory::kSyntaxError});
  }
  return failures;
}

RenderResult ExternalRenderer::RenderTemplates(const ChartPackage& pkg,
                                               const ValueTree& values) {
  SlotGuard slot(*slots_);
  TempDir tmp;
  const fs::path chart_dir = tmp.path() / pkg.metadata.name;
  Materialise(pkg, values, chart_dir);
  const ProcessResult proc =
      RunProcess({binary_, "template", chart_dir.string()});
  RenderResult result;
  if (proc.exit_code != 0) {
    result.failures = ParseExternalErrors(proc.err);
    return result;
  }
  ParseExternalOutput(proc.out, result);
  return result;
}

}  // namespace chartqa
