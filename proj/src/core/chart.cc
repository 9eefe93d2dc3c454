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

#include "chartqa/core/chart.h"

#include "chartqa/core/stem.h"

namespace chartqa {

ChartRef ChartRef::FromNameVersion(std::string name, std::string version) {
  std::string file_name = name + "-" + version + ".tgz";
  return FromFile(std::move(name), std::move(version), std::move(file_name));
}

ChartRef ChartRef::FromFile(std::string name, std::string version,
                            std::string file_name) {
  ChartRef ref;
  ref.stem = MangleStem(file_name);
  ref.name = std::move(name);
  ref.version = std::move(version);
  ref.file_name = std::move(file_name);
  return ref;
}

const TemplateFile* ChartPackage::FindTemplate(const std::string& path) const {
  for (const auto& t : templates) {
    if (t.path == path) return &t;
  }
  return nullptr;
}

std::string ChartPackage::values_source() const {
  auto it = files.find("values.yaml");
  return it == files.end() ? std::string() : it->second;
}

}  // namespace chartqa
