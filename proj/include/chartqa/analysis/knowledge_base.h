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

#ifndef CHARTQA_ANALYSIS_KNOWLEDGE_BASE_H_
#define CHARTQA_ANALYSIS_KNOWLEDGE_BASE_H_

#include <chrono>
#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <utility>

#include "chartqa/core/chart.h"
#include "chartqa/render/render.h"

namespace chartqa {

// Learned override values keyed by (stem, output key path). Values are kept
// in canonical scalar form so they can be injected back without loss.
class VariabilityKnowledgeBase {
 public:
  struct Entry {
    std::string value;
    // Not persisted; entries loaded from disk carry the load time.
    std::chrono::system_clock::time_point learned_at;
  };
  using Key = std::pair<std::string, std::string>;

  // Returns false and leaves the entry untouched when it already exists.
  bool Add(const StemName& stem, const std::string& key_path,
           std::string value,
           std::chrono::system_clock::time_point learned_at =
               std::chrono::system_clock::now());

  const Entry* Find(const StemName& stem, const std::string& key_path) const;
  Overrides OverridesFor(const StemName& stem) const;
  int CountFor(const StemName& stem) const;
  std::size_t size() const { return entries_.size(); }
  const std::map<Key, Entry>& entries() const { return entries_; }

  // Drops every entry of the stem.
  void Reset(const StemName& stem);

  // File format: JSON object "<stem>|<key_path>" -> override string.
  std::string ToJson() const;
  static VariabilityKnowledgeBase FromJson(const std::string& text);

  // A missing file loads as an empty base. Throws Error(kStorageError).
  static VariabilityKnowledgeBase Load(const std::filesystem::path& path);
  void Save(const std::filesystem::path& path) const;

 private:
  std::map<Key, Entry> entries_;
};

// Read-modify-write of a KB file under an exclusive lock on "<path>.lock".
void UpdateKnowledgeBaseFile(
    const std::filesystem::path& path,
    const std::function<void(VariabilityKnowledgeBase&)>& update);

}  // namespace chartqa

#endif  // CHARTQA_ANALYSIS_KNOWLEDGE_BASE_H_
