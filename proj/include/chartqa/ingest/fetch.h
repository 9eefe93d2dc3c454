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

#ifndef CHARTQA_INGEST_FETCH_H_
#define CHARTQA_INGEST_FETCH_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace chartqa {

// Reads bytes from an http(s):// URL, a file:// URL or a plain filesystem
// path. When `expected_sha256` is set the bytes are verified against it.
// Throws FetchError or ChecksumMismatch.
std::string FetchArchive(std::string_view url_or_path,
                         const std::optional<std::string>& expected_sha256 =
                             std::nullopt);

// Resolves an index-relative download URL against the index location.
std::string ResolveLocation(std::string_view index_location,
                            std::string_view url);

struct FetchRequest {
  std::string location;
  std::optional<std::string> sha256;
};

// Fetches all requests with at most `jobs` in flight. Any failure aborts
// the batch and rethrows the first error.
std::vector<std::string> FetchAll(const std::vector<FetchRequest>& requests,
                                  int jobs);

}  // namespace chartqa

#endif  // CHARTQA_INGEST_FETCH_H_
