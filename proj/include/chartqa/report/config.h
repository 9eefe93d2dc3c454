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

#ifndef CHARTQA_REPORT_CONFIG_H_
#define CHARTQA_REPORT_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chartqa/analysis/duplicates.h"
#include "chartqa/ecosystem/maintainers.h"
#include "chartqa/render/render.h"

namespace chartqa {

// One source of settings; unset fields defer to the next layer.
struct ConfigLayer {
  std::optional<int> threshold;
  std::optional<std::vector<std::string>> blacklist;
  std::optional<std::string> engine;
  std::optional<std::string> renderer_bin;
  std::optional<IdentityMode> identity_mode;
  std::optional<int> jobs;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> iterations;
  std::optional<std::string> base_url;
  std::optional<std::string> knowledge_base;
};

struct RunConfig {
  DuplicateConfig duplicates;
  std::string engine = "builtin";
  std::string renderer_bin;  // empty: look up "helm" on PATH
  IdentityMode identity_mode = IdentityMode::kEmail;
  int jobs = 1;
  std::optional<std::uint64_t> seed;
  std::uint64_t iterations = 10000;
  std::string base_url = "https://chartqa.invalid";
  std::string knowledge_base;
};

// Comma separated; surrounding blanks trimmed, empty items kept only as "".
std::vector<std::string> ParseBlacklist(std::string_view text);

// YAML mapping with keys threshold, blacklist, engine, renderer_bin,
// identity_mode, jobs, seed, iterations, base_url, knowledge_base.
// Throws Error(kInvalidArgument).
ConfigLayer ParseConfigText(std::string_view text);
ConfigLayer LoadConfigFile(const std::filesystem::path& path);

// CHARTQA_RENDERER only.
ConfigLayer ConfigFromEnvironment();

// Precedence: cli, then file, then env, then defaults.
// Throws Error(kInvalidArgument) for out-of-range values.
RunConfig ResolveConfig(const ConfigLayer& cli, const ConfigLayer& file,
                        const ConfigLayer& env);

// Throws Error(kEngineUnavailable) or Error(kInvalidArgument).
std::unique_ptr<Renderer> MakeRenderer(const RunConfig& config);

}  // namespace chartqa

#endif  // CHARTQA_REPORT_CONFIG_H_
