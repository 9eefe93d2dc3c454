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

#include "fixtures.h"

#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <stdexcept>

#include "chartqa/core/archive.h"
#include "chartqa/core/chart_parse.h"

namespace chartqa::testing {
namespace fs = std::filesystem;

TempDir::TempDir() {
  std::string tmpl = (fs::temp_directory_path() / "chartqa-test-XXXXXX").string();
  if (::mkdtemp(tmpl.data()) == nullptr) {
    throw std::runtime_error("mkdtemp failed");
  }
  path_ = tmpl;
}

TempDir::~TempDir() {
  std::error_code ec;
  fs::remove_all(path_, ec);
}

void WriteText(const fs::path& p, const std::string& text) {
  fs::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  out << text;
  if (!out) throw std::runtime_error("cannot write " + p.string());
}

ChartBuilder::ChartBuilder(std::string name, std::string version)
    : name_(std::move(name)), version_(std::move(version)) {}

ChartBuilder& ChartBuilder::Maintainer(const std::string& name,
                                       const std::string& email) {
  maintainers_.emplace_back(name, email);
  return *this;
}

ChartBuilder& ChartBuilder::MaintainerNameOnly(const std::string& name) {
  maintainers_.emplace_back(name, "");
  return *this;
}

ChartBuilder& ChartBuilder::Values(std::string text) {
  files_["values.yaml"] = std::move(text);
  return *this;
}

ChartBuilder& ChartBuilder::Template(const std::string& path,
                                     std::string body) {
  files_["templates/" + path] = std::move(body);
  return *this;
}

ChartBuilder& ChartBuilder::File(const std::string& path, std::string body) {
  files_[path] = std::move(body);
  return *this;
}

std::map<std::string, std::string> ChartBuilder::Files() const {
  std::map<std::string, std::string> files = files_;
  std::string chart = "apiVersion: v1\nname: " + name_ + "\nversion: " +
                      version_ + "\n";
  if (!maintainers_.empty()) {
    chart += "maintainers:\n";
    for (const auto& [n, e] : maintainers_) {
      chart += "  - name: " + n + "\n";
      if (!e.empty()) chart += "    email: " + e + "\n";
    }
  }
  files.emplace("Chart.yaml", chart);
  return files;
}

ChartPackage ChartBuilder::Package() const { return ParseChartFiles(Files()); }

std::string ChartBuilder::Archive() const {
  std::vector<ArchiveEntry> entries;
  for (const auto& [path, data] : Files()) {
    entries.push_back(ArchiveEntry{name_ + "/" + path, data, false});
  }
  return WriteTarGz(entries);
}

fs::path ChartBuilder::WriteDir(const fs::path& parent) const {
  const fs::path dir = parent / name_;
  for (const auto& [path, data] : Files()) WriteText(dir / path, data);
  return dir;
}

ChartPackage DuplicateFixture(int index, std::mt19937_64& rng) {
  const std::string name = "fixture" + std::to_string(index);
  std::uniform_int_distribution<int> copies(3, 6);
  std::uniform_int_distribution<int> groups(1, 3);
  const int group_count = groups(rng);
  std::string deploy =
      "apiVersion: apps/v1\n"
      "kind: Deployment\n"
      "metadata:\n"
      "  name: {{ .Release.Name }}-" + name + "\n"
      "  labels:\n";
  std::string service =
      "apiVersion: v1\n"
      "kind: Service\n"
      "metadata:\n"
      "  name: {{ .Release.Name }}-svc\n"
      "  labels:\n";
  for (int g = 0; g < group_count; ++g) {
    const int n = copies(rng);
    const bool quoted = g % 2 == 1;
    const std::string value = name + "-value-" + std::to_string(g);
    for (int i = 0; i < n; ++i) {
      const std::string key = "k" + std::to_string(g) + "x" + std::to_string(i);
      const std::string scalar = quoted ? "\"" + value + "\"" : value;
      std::string& target = i % 2 == 0 ? deploy : service;
      target += "    " + key + ": " + scalar + "\n";
    }
  }
  deploy +=
      "spec:\n"
      "  replicas: 1\n"
      "  template:\n"
      "    spec:\n"
      "      containers:\n"
      "        - name: main\n"
      "          image: \"{{ .Values.image }}:{{ .Values.tag }}\"\n"
      "          ports:\n"
      "            - containerPort: 8080\n";
  service +=
      "spec:\n"
      "  ports:\n"
      "    - port: 8080 # service port\n"
      "      targetPort: 8080\n";
  return ChartBuilder(name, "1.0." + std::to_string(index))
      .Maintainer("Owner " + std::to_string(index),
                  "owner" + std::to_string(index) + "@example.com")
      .Values("image: nginx\ntag: \"1.15\"\n")
      .Template("deployment.yaml", deploy)
      .Template("service.yaml", service)
      .Package();
}

}  // namespace chartqa::testing
