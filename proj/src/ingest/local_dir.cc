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

#include "chartqa/ingest/local_dir.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "chartqa/core/chart_parse.h"

namespace chartqa {
namespace fs = std::filesystem;

namespace {

std::string Slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error(ErrorCode::kFetchError, "cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool IsArchive(const fs::path& p) { return p.extension() == ".tgz"; }

bool LooksLikeChart(const fs::path& dir) {
  std::error_code ec;
  return fs::is_regular_file(dir / "Chart.yaml", ec) ||
         fs::is_directory(dir / "templates", ec) ||
         fs::is_regular_file(dir / "values.yaml", ec);
}

void Load(const fs::path& location, bool archive, IngestResult& out) {
  try {
    ChartPackage pkg = archive ? ParseChartArchive(Slurp(location))
                               : ReadChartDirectory(location);
    out.charts.push_back(LocalChart{location, std::move(pkg)});
  } catch (const Error& e) {
    out.failures.push_back(IngestFailure{location, e.code(), e.what()});
  }
}

void Walk(const fs::path& dir, IngestResult& out) {
  std::vector<fs::path> children;
  for (const auto& entry : fs::directory_iterator(dir)) {
    children.push_back(entry.path());
  }
  std::sort(children.begin(), children.end());
  for (const auto& child : children) {
    std::error_code ec;
    if (fs::is_directory(child, ec)) {
      if (LooksLikeChart(child)) {
        Load(child, false, out);
      } else {
        Walk(child, out);
      }
    } else if (IsArchive(child)) {
      Load(child, true, out);
    }
  }
}

}  // namespace

ChartPackage ReadChartDirectory(const fs::path& dir) {
  std::map<std::string, std::string> files;
  for (const auto& entry : fs::recursive_directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    files[fs::relative(entry.path(), dir).generic_string()] =
        Slurp(entry.path());
  }
  return ParseChartFiles(std::move(files));
}

IngestResult IngestLocalDir(const fs::path& path) {
  std::error_code ec;
  if (!fs::exists(path, ec)) {
    throw Error(ErrorCode::kFetchError, "no such path: " + path.string());
  }
  IngestResult out;
  try {
    if (fs::is_regular_file(path, ec)) {
      Load(path, true, out);
    } else if (LooksLikeChart(path)) {
      Load(path, false, out);
    } else {
      Walk(path, out);
    }
  } catch (const fs::filesystem_error& e) {
    throw Error(ErrorCode::kFetchError, e.what());
  }
  return out;
}

}  // namespace chartqa
