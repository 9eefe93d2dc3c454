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

#include "chartqa/analysis/knowledge_base.h"

#include <json.hpp>

#include "chartqa/core/error.h"
#include "chartqa/core/file_util.h"

namespace chartqa {
namespace fs = std::filesystem;

bool VariabilityKnowledgeBase::Add(const StemName& stem,
                                   const std::string& key_path,
                                   std::string value,
                                   std::chrono::system_clock::time_point at) {
  return entries_
      .try_emplace(Key{stem.value(), key_path}, Entry{std::move(value), at})
      .second;
}

const VariabilityKnowledgeBase::Entry* VariabilityKnowledgeBase::Find(
    const StemName& stem, const std::string& key_path) const {
  auto it = entries_.find(Key{stem.value(), key_path});
  return it == entries_.end() ? nullptr : &it->second;
}

Overrides VariabilityKnowledgeBase::OverridesFor(const StemName& stem) const {
  Overrides out;
  for (auto it = entries_.lower_bound(Key{stem.value(), ""});
       it != entries_.end() && it->first.first == stem.value(); ++it) {
    out[it->first.second] = it->second.value;
  }
  return out;
}

int VariabilityKnowledgeBase::CountFor(const StemName& stem) const {
  int n = 0;
  for (auto it = entries_.lower_bound(Key{stem.value(), ""});
       it != entries_.end() && it->first.first == stem.value(); ++it) {
    ++n;
  }
  return n;
}

void VariabilityKnowledgeBase::Reset(const StemName& stem) {
  auto first = entries_.lower_bound(Key{stem.value(), ""});
  auto last = first;
  while (last != entries_.end() && last->first.first == stem.value()) ++last;
  entries_.erase(first, last);
}

std::string VariabilityKnowledgeBase::ToJson() const {
  nlohmann::ordered_json doc = nlohmann::ordered_json::object();
  for (const auto& [key, entry] : entries_) {
    doc[key.first + "|" + key.second] = entry.value;
  }
  return doc.dump(2) + "\n";
}

VariabilityKnowledgeBase VariabilityKnowledgeBase::FromJson(
    const std::string& text) {
  VariabilityKnowledgeBase kb;
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kStorageError,
                std::string("knowledge base is not JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    throw Error(ErrorCode::kStorageError, "knowledge base must be an object");
  }
  const auto now = std::chrono::system_clock::now();
  for (const auto& [key, value] : doc.items()) {
    const std::size_t bar = key.find('|');
    if (bar == std::string::npos || !value.is_string()) {
      throw Error(ErrorCode::kStorageError, "bad knowledge base entry " + key);
    }
    kb.Add(StemName(key.substr(0, bar)), key.substr(bar + 1),
           value.get<std::string>(), now);
  }
  return kb;
}

VariabilityKnowledgeBase VariabilityKnowledgeBase::Load(const fs::path& path) {
  std::error_code ec;
  if (!fs::exists(path, ec)) return {};
  return FromJson(ReadFile(path));
}

void VariabilityKnowledgeBase::Save(const fs::path& path) const {
  if (path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
  }
  WriteFileAtomic(path, ToJson());
}

void UpdateKnowledgeBaseFile(
    const fs::path& path,
    const std::function<void(VariabilityKnowledgeBase&)>& update) {
  fs::path lock_path = path;
  lock_path += ".lock";
  FileLock lock(lock_path);
  VariabilityKnowledgeBase kb = VariabilityKnowledgeBase::Load(path);
  update(kb);
  kb.Save(path);
}

}  // namespace chartqa
