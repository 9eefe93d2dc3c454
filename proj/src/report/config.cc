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

#include "chartqa/report/config.h"

#include <yaml-cpp/yaml.h>

#include <cstdlib>

#include "chartqa/core/error.h"
#include "chartqa/core/file_util.h"
#include "chartqa/render/builtin_engine.h"
#include "chartqa/render/external_adapter.h"

namespace chartqa {
namespace {

std::string Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return std::string(s);
}

template <typename T>
T As(const YAML::Node& node, const char* key) {
  try {
    return node.as<T>();
  } catch (const YAML::Exception&) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string("config: bad value for ") + key);
  }
}

}  // namespace

std::vector<std::string> ParseBlacklist(std::string_view text) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  for (;;) {
    const std::size_t comma = text.find(',', pos);
    out.push_back(Trim(text.substr(pos, comma == std::string_view::npos
                                            ? std::string_view::npos
                                            : comma - pos)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

ConfigLayer ParseConfigText(std::string_view text) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(text));
  } catch (const YAML::Exception& e) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string("config is not YAML: ") + e.what());
  }
  ConfigLayer layer;
  if (root.IsNull()) return layer;
  if (!root.IsMap()) {
    throw Error(ErrorCode::kInvalidArgument, "config must be a mapping");
  }
  for (auto it = root.begin(); it != root.end(); ++it) {
    const std::string key = it->first.as<std::string>();
    const YAML::Node& v = it->second;
    if (key == "threshold") {
      layer.threshold = As<int>(v, "threshold");
    } else if (key == "blacklist") {
      if (v.IsSequence()) {
        std::vector<std::string> items;
        for (const auto& item : v) {
          items.push_back(item.IsNull() ? "" : As<std::string>(item, "blacklist"));
        }
        layer.blacklist = items;
      } else {
        layer.blacklist = ParseBlacklist(As<std::string>(v, "blacklist"));
      }
    } else if (key == "engine") {
      layer.engine = As<std::string>(v, "engine");
    } else if (key == "renderer_bin") {
      layer.renderer_bin = As<std::string>(v, "renderer_bin");
    } else if (key == "identity_mode") {
      layer.identity_mode =
          ParseIdentityMode(As<std::string>(v, "identity_mode"));
      if (!layer.identity_mode) {
        throw Error(ErrorCode::kInvalidArgument,
                    "config: identity_mode must be email or name-email");
      }
    } else if (key == "jobs") {
      layer.jobs = As<int>(v, "jobs");
    } else if (key == "seed") {
      layer.seed = As<std::uint64_t>(v, "seed");
    } else if (key == "iterations") {
      layer.iterations = As<std::uint64_t>(v, "iterations");
    } else if (key == "base_url") {
      layer.base_url = As<std::string>(v, "base_url");
    } else if (key == "knowledge_base") {
      layer.knowledge_base = As<std::string>(v, "knowledge_base");
    } else {
      throw Error(ErrorCode::kInvalidArgument, "config: unknown key " + key);
    }
  }
  return layer;
}

ConfigLayer LoadConfigFile(const std::filesystem::path& path) {
  std::string text;
  try {
    text = ReadFile(path);
  } catch (const Error&) {
    throw Error(ErrorCode::kInvalidArgument, "cannot read config " + path.string());
  }
  return ParseConfigText(text);
}

ConfigLayer ConfigFromEnvironment() {
  ConfigLayer layer;
  if (const char* r = std::getenv("CHARTQA_RENDERER"); r && *r) {
    layer.renderer_bin = r;
  }
  return layer;
}

RunConfig ResolveConfig(const ConfigLayer& cli, const ConfigLayer& file,
                        const ConfigLayer& env) {
  RunConfig c;
  auto pick = [&](auto member, auto& target) {
    if (env.*member) target = *(env.*member);
    if (file.*member) target = *(file.*member);
    if (cli.*member) target = *(cli.*member);
  };
  pick(&ConfigLayer::threshold, c.duplicates.threshold);
  pick(&ConfigLayer::blacklist, c.duplicates.blacklist);
  pick(&ConfigLayer::engine, c.engine);
  pick(&ConfigLayer::renderer_bin, c.renderer_bin);
  pick(&ConfigLayer::identity_mode, c.identity_mode);
  pick(&ConfigLayer::jobs, c.jobs);
  pick(&ConfigLayer::iterations, c.iterations);
  pick(&ConfigLayer::base_url, c.base_url);
  pick(&ConfigLayer::knowledge_base, c.knowledge_base);
  for (const ConfigLayer* layer : {&env, &file, &cli}) {
    if (layer->seed) c.seed = layer->seed;
  }
  if (c.duplicates.threshold < 2) {
    throw Error(ErrorCode::kInvalidArgument, "threshold must be at least 2");
  }
  if (c.jobs < 1) throw Error(ErrorCode::kInvalidArgument, "jobs must be >= 1");
  if (c.iterations < 1) {
    throw Error(ErrorCode::kInvalidArgument, "iterations must be >= 1");
  }
  if (c.engine != "builtin" && c.engine != "external") {
    throw Error(ErrorCode::kInvalidArgument,
                "engine must be builtin or external, not " + c.engine);
  }
  return c;
}

std::unique_ptr<Renderer> MakeRenderer(const RunConfig& config) {
  if (config.engine == "builtin") {
    BuiltinOptions options;
    options.seed = config.seed;
    return std::make_unique<BuiltinRenderer>(options);
  }
  if (config.engine == "external") {
    const std::string bin =
        config.renderer_bin.empty() ? "helm" : config.renderer_bin;
    return std::make_unique<ExternalRenderer>(bin, config.jobs);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown engine " + config.engine);
}

}  // namespace chartqa
