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

#include "chartqa/core/stem.h"

#include <set>

#include "chartqa/core/error.h"

namespace chartqa {

StemName MangleStem(std::string_view file_name) {
  std::string_view base = file_name;
  constexpr std::string_view kSuffix = ".tgz";
  if (base.size() >= kSuffix.size() &&
      base.substr(base.size() - kSuffix.size()) == kSuffix) {
    base.remove_suffix(kSuffix.size());
  }
  std::string stem;
  std::string_view rest = base;
  for (;;) {
    const std::size_t dash = rest.find('-');
    std::string_view component = rest.substr(0, dash);
    if (!component.empty() && component[0] >= '0' && component[0] <= '9') {
      break;
    }
    stem.append(component);
    if (dash == std::string_view::npos) break;
    rest.remove_prefix(dash + 1);
  }
  if (stem.empty()) {
    for (char c : base) {
      if (c != '-') stem.push_back(c);
    }
  }
  return StemName(std::move(stem));
}

double VersioningOverhead(std::span<const ChartRef> charts) {
  if (charts.empty()) {
    throw Error(ErrorCode::kEmptyCorpus, "no charts to compute overhead over");
  }
  std::set<StemName> stems;
  for (const auto& c : charts) stems.insert(c.stem);
  const double files = static_cast<double>(charts.size());
  const double distinct = static_cast<double>(stems.size());
  return (files - distinct) / distinct;
}

}  // namespace chartqa
