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

#ifndef CHARTQA_CORE_ARCHIVE_H_
#define CHARTQA_CORE_ARCHIVE_H_

#include <string>
#include <string_view>
#include <vector>

namespace chartqa {

struct ArchiveEntry {
  std::string path;
  std::string data;
  bool is_directory = false;
};

// gzip (RFC 1952) helpers over zlib. Throw Error{kMalformedArchive}.
std::string GunzipBytes(std::string_view compressed);
std::string GzipBytes(std::string_view raw);

// Reads a tar stream (ustar, GNU long names, pax "path" records). Regular
// files and directories are returned; links and devices are skipped.
std::vector<ArchiveEntry> ReadTar(std::string_view tar);
std::string WriteTar(const std::vector<ArchiveEntry>& entries);

std::vector<ArchiveEntry> ReadTarGz(std::string_view archive);
std::string WriteTarGz(const std::vector<ArchiveEntry>& entries);

}  // namespace chartqa

#endif  // CHARTQA_CORE_ARCHIVE_H_
