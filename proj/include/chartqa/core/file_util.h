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

#ifndef CHARTQA_CORE_FILE_UTIL_H_
#define CHARTQA_CORE_FILE_UTIL_H_

#include <filesystem>
#include <string>

namespace chartqa {

// Exclusive advisory lock (flock) held for the object's lifetime.
// Throws Error(kStorageError).
class FileLock {
 public:
  explicit FileLock(const std::filesystem::path& path);
  ~FileLock();
  FileLock(const FileLock&) = delete;
  FileLock& operator=(const FileLock&) = delete;

 private:
  int fd_ = -1;
};

// Both throw Error(kStorageError).
std::string ReadFile(const std::filesystem::path& p);
void WriteFile(const std::filesystem::path& p, const std::string& data);

// Writes to a sibling temporary file, then renames over p.
void WriteFileAtomic(const std::filesystem::path& p, const std::string& data);

}  // namespace chartqa

#endif  // CHARTQA_CORE_FILE_UTIL_H_
