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

#ifndef CHARTQA_CORE_CHART_H_
#define CHARTQA_CORE_CHART_H_

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chartqa/core/value_tree.h"

namespace chartqa {

// Version-free chart name used to relate different versions of one chart.
// See MangleStem() for the derivation rule.
class StemName {
 public:
  StemName() = default;
  explicit StemName(std::string value) : value_(std::move(value)) {}

  const std::string& value() const { return value_; }

  auto operator<=>(const StemName&) const = default;

 private:
  std::string value_;
};

struct ChartRef {
  std::string name;
  std::string version;  // opaque; never ordered semantically
  std::string file_name;
  StemName stem;

  // "<name>-<version>.tgz" with the stem derived from that file name.
  static ChartRef FromNameVersion(std::string name, std::string version);
  static ChartRef FromFile(std::string name, std::string version,
                           std::string file_name);

  bool operator==(const ChartRef& o) const {
    return file_name == o.file_name && name == o.name && version == o.version;
  }
  bool operator<(const ChartRef& o) const {
    if (file_name != o.file_name) return file_name < o.file_name;
    if (name != o.name) return name < o.name;
    return version < o.version;
  }
};

struct Maintainer {
  std::optional<std::string> name;
  std::optional<std::string> email;

  bool well_formed() const { return name || email; }
  bool operator==(const Maintainer&) const = default;
};

struct ChartMetadata {
  std::string name;
  std::string version;
  std::optional<std::string> description;
  std::vector<Maintainer> maintainers;
  std::optional<std::string> icon;

  bool operator==(const ChartMetadata&) const = default;
};

struct TemplateFile {
  std::string path;  // relative to the chart root, always "templates/..."
  std::string body;
};

// One unpacked chart. `files` keeps every archive entry verbatim (relative to
// the chart root) so a package can be rewritten and re-materialised; the
// remaining fields are the parsed views the analyses work on.
struct ChartPackage {
  ChartMetadata metadata;
  ValueTree values;
  std::vector<TemplateFile> templates;
  std::vector<ChartRef> requirements;
  std::map<std::string, std::string> files;

  ChartRef ref() const {
    return ChartRef::FromNameVersion(metadata.name, metadata.version);
  }
  const TemplateFile* FindTemplate(const std::string& path) const;
  // Raw values.yaml, empty when the chart has none.
  std::string values_source() const;
};

}  // namespace chartqa

#endif  // CHARTQA_CORE_CHART_H_
