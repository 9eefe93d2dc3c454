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

#ifndef CHARTQA_TESTS_SUPPORT_FIXTURES_H_
#define CHARTQA_TESTS_SUPPORT_FIXTURES_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "chartqa/core/chart.h"

namespace chartqa::testing {

// Removes the directory tree on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& rel) const {
    return path_ / rel;
  }

 private:
  std::filesystem::path path_;
};

class ChartBuilder {
 public:
  ChartBuilder(std::string name, std::string version);

  ChartBuilder& Maintainer(const std::string& name, const std::string& email);
  ChartBuilder& MaintainerNameOnly(const std::string& name);
  ChartBuilder& Values(std::string text);
  ChartBuilder& Template(const std::string& path, std::string body);
  ChartBuilder& File(const std::string& path, std::string body);

  std::map<std::string, std::string> Files() const;
  ChartPackage Package() const;
  std::string Archive() const;  // gzipped tar under "<name>/"
  std::filesystem::path WriteDir(const std::filesystem::path& parent) const;
  const std::string& name() const { return name_; }
  const std::string& version() const { return version_; }

 private:
  std::string name_;
  std::string version_;
  std::vector<std::pair<std::string, std::string>> maintainers_;
  std::map<std::string, std::string> files_;
};

// A chart with `copies` literal repetitions of each duplicate value spread
// over two templates, plus templated values and a blacklisted marker.
ChartPackage DuplicateFixture(int index, std::mt19937_64& rng);

void WriteText(const std::filesystem::path& p, const std::string& text);

}  // namespace chartqa::testing

#endif  // CHARTQA_TESTS_SUPPORT_FIXTURES_H_
