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

#include "chartqa/core/chart_parse.h"

#include <yaml-cpp/yaml.h>

#include <set>

#include "chartqa/core/archive.h"
#include "chartqa/core/error.h"
#include "chartqa/core/log.h"
#include "chartqa/core/yaml.h"

namespace chartqa {
namespace {

std::optional<std::string> OptionalText(const YAML::Node& node,
                                        const char* key) {
  const YAML::Node child = node[key];
  if (!child || !child.IsScalar()) return std::nullopt;
  return child.Scalar();
}

void AppendField(const char* key, const std::string& value, int indent,
                 std::string& out) {
  const ScalarStyle style =
      IsPlainSafe(value) && ResolvePlainScalar(value) == ScalarType::kString
          ? ScalarStyle::kPlain
          : ScalarStyle::kQuoted;
  out += std::string(indent, ' ') + key + ": " +
         EmitScalar(Scalar{value, style}) + "\n";
}

std::vector<ChartRef> DependencyList(const YAML::Node& deps) {
  std::vector<ChartRef> refs;
  if (!deps || !deps.IsSequence()) return refs;
  for (const auto& d : deps) {
    if (!d.IsMap()) continue;
    auto name = OptionalText(d, "name");
    if (!name) continue;
    refs.push_back(
        ChartRef::FromNameVersion(*name, OptionalText(d, "version").value_or("")));
  }
  return refs;
}

std::vector<ChartRef> ParseRequirements(
    const std::map<std::string, std::string>& files) {
  std::vector<ChartRef> refs;
  for (const char* name : {"requirements.yaml", "requirements.yml"}) {
    auto it = files.find(name);
    if (it == files.end()) continue;
    try {
      auto more = DependencyList(YAML::Load(it->second)["dependencies"]);
      refs.insert(refs.end(), more.begin(), more.end());
    } catch (const YAML::Exception& e) {
      throw Error(ErrorCode::kMetadataParseError,
                  std::string(name) + ": " + e.what());
    }
  }
  auto chart_yaml = files.find("Chart.yaml");
  try {
    auto more = DependencyList(YAML::Load(chart_yaml->second)["dependencies"]);
    refs.insert(refs.end(), more.begin(), more.end());
  } catch (const YAML::Exception&) {
    // Already validated by ParseChartMetadata.
  }

  std::set<std::string> listed;
  for (const auto& r : refs) listed.insert(r.name);
  std::set<std::string> bundled_dirs;
  for (const auto& [path, data] : files) {
    if (path.rfind("charts/", 0) != 0) continue;
    const std::string rest = path.substr(7);
    if (rest.find('/') == std::string::npos && rest.size() > 4 &&
        rest.substr(rest.size() - 4) == ".tgz") {
      try {
        ChartPackage sub = ParseChartArchive(data);
        if (listed.insert(sub.metadata.name).second) refs.push_back(sub.ref());
      } catch (const Error& e) {
        LogWarning("skipping bundled subchart " + path + ": " + e.what());
      }
    } else if (rest.size() > 11 && rest.find('/') == rest.size() - 11 &&
               rest.substr(rest.size() - 11) == "/Chart.yaml") {
      try {
        ChartMetadata sub = ParseChartMetadata(data);
        if (listed.insert(sub.name).second) {
          refs.push_back(ChartRef::FromNameVersion(sub.name, sub.version));
        }
      } catch (const Error& e) {
        LogWarning("skipping bundled subchart " + path + ": " + e.what());
      }
    }
  }
  return refs;
}

}  // namespace

ChartMetadata ParseChartMetadata(std::string_view chart_yaml) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(chart_yaml));
  } catch (const YAML::Exception& e) {
    throw Error(ErrorCode::kMetadataParseError, e.what());
  }
  if (!root.IsMap()) {
    throw Error(ErrorCode::kMetadataParseError, "Chart.yaml is not a mapping");
  }
  ChartMetadata md;
  md.name = OptionalText(root, "name").value_or("");
  md.version = OptionalText(root, "version").value_or("");
  if (md.name.empty() || md.version.empty()) {
    throw Error(ErrorCode::kMetadataParseError,
                "Chart.yaml lacks a name or version");
  }
  md.description = OptionalText(root, "description");
  md.icon = OptionalText(root, "icon");
  const YAML::Node maintainers = root["maintainers"];
  if (maintainers && maintainers.IsSequence()) {
    for (const auto& m : maintainers) {
      if (!m.IsMap()) continue;
      md.maintainers.push_back(
          Maintainer{OptionalText(m, "name"), OptionalText(m, "email")});
    }
  }
  return md;
}

std::string SerializeChartMetadata(const ChartMetadata& md) {
  std::string out = "apiVersion: v1\n";
  AppendField("name", md.name, 0, out);
  AppendField("version", md.version, 0, out);
  if (md.description) AppendField("description", *md.description, 0, out);
  if (md.icon) AppendField("icon", *md.icon, 0, out);
  if (!md.maintainers.empty()) {
    out += "maintainers:\n";
    for (const auto& m : md.maintainers) {
      if (!m.name && !m.email) {
        out += "- {}\n";
        continue;
      }
      bool first = true;
      for (const auto& [key, value] :
           {std::pair{"name", m.name}, std::pair{"email", m.email}}) {
        if (!value) continue;
        std::string line;
        AppendField(key, *value, 0, line);
        out += (first ? "- " : "  ") + line;
        first = false;
      }
    }
  }
  return out;
}

ChartPackage ParseChartFiles(std::map<std::string, std::string> files) {
  auto chart_yaml = files.find("Chart.yaml");
  if (chart_yaml == files.end()) {
    throw Error(ErrorCode::kMissingMetadata, "no Chart.yaml");
  }
  ChartPackage pkg;
  pkg.metadata = ParseChartMetadata(chart_yaml->second);
  auto values = files.find("values.yaml");
  if (values != files.end()) {
    try {
      pkg.values = ParseYaml(values->second);
    } catch (const YamlError& e) {
      throw Error(ErrorCode::kMetadataParseError,
                  std::string("values.yaml: ") + e.what());
    }
  }
  if (pkg.values.is_null()) pkg.values = ValueTree::EmptyMapping();
  for (const auto& [path, body] : files) {
    if (path.rfind("templates/", 0) == 0 && path.size() > 10) {
      pkg.templates.push_back(TemplateFile{path, body});
    }
  }
  pkg.requirements = ParseRequirements(files);
  pkg.files = std::move(files);
  return pkg;
}

ChartPackage ParseChartArchive(std::string_view archive) {
  std::vector<ArchiveEntry> entries = ReadTarGz(archive);
  std::string top;
  std::map<std::string, std::string> files;
  for (auto& e : entries) {
    const std::size_t slash = e.path.find('/');
    const std::string head = e.path.substr(0, slash);
    if (head.empty()) continue;
    if (top.empty()) {
      top = head;
    } else if (head != top) {
      throw Error(ErrorCode::kMalformedArchive,
                  "archive has more than one top-level entry: " + top + ", " +
                      head);
    }
    if (e.is_directory || slash == std::string::npos) {
      if (!e.is_directory) {
        throw Error(ErrorCode::kMalformedArchive,
                    "top-level file outside the chart directory: " + e.path);
      }
      continue;
    }
    files[e.path.substr(slash + 1)] = std::move(e.data);
  }
  if (top.empty()) throw Error(ErrorCode::kMalformedArchive, "empty archive");
  return ParseChartFiles(std::move(files));
}

std::string PackChartArchive(const ChartPackage& pkg) {
  std::vector<ArchiveEntry> entries;
  const std::string& root = pkg.metadata.name;
  entries.push_back(ArchiveEntry{root, {}, true});
  for (const auto& [path, data] : pkg.files) {
    entries.push_back(ArchiveEntry{root + "/" + path, data, false});
  }
  return WriteTarGz(entries);
}

}  // namespace chartqa
