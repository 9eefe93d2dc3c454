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

#include "chartqa/core/archive.h"

#include <zlib.h>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstring>

#include "chartqa/core/error.h"

namespace chartqa {
namespace {

constexpr std::size_t kBlock = 512;

[[noreturn]] void Malformed(const std::string& why) {
  throw Error(ErrorCode::kMalformedArchive, why);
}

std::string Field(std::string_view header, std::size_t offset,
                  std::size_t len) {
  std::string_view f = header.substr(offset, len);
  const std::size_t nul = f.find('\0');
  return std::string(f.substr(0, nul));
}

std::uint64_t Octal(std::string_view header, std::size_t offset,
                    std::size_t len) {
  std::string_view f = header.substr(offset, len);
  // GNU base-256 encoding for large sizes.
  if (!f.empty() && (static_cast<unsigned char>(f[0]) & 0x80) != 0) {
    std::uint64_t v = static_cast<unsigned char>(f[0]) & 0x7f;
    for (std::size_t i = 1; i < f.size(); ++i) {
      v = (v << 8) | static_cast<unsigned char>(f[i]);
    }
    return v;
  }
  std::uint64_t v = 0;
  for (char c : f) {
    if (c == '\0' || c == ' ') {
      if (v != 0) break;
      continue;
    }
    if (c < '0' || c > '7') Malformed("bad octal field in tar header");
    v = v * 8 + static_cast<std::uint64_t>(c - '0');
  }
  return v;
}

bool AllZero(std::string_view block) {
  return std::all_of(block.begin(), block.end(),
                     [](char c) { return c == '\0'; });
}

bool ChecksumOk(std::string_view header) {
  const std::uint64_t stored = Octal(header, 148, 8);
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < kBlock; ++i) {
    const bool in_field = i >= 148 && i < 156;
    sum += in_field ? ' ' : static_cast<unsigned char>(header[i]);
  }
  return sum == stored;
}

// Extracts the "path" record from a pax extended header body.
std::string PaxPath(std::string_view body) {
  std::string path;
  while (!body.empty()) {
    const std::size_t space = body.find(' ');
    if (space == std::string_view::npos) break;
    const std::size_t len = std::strtoul(std::string(body.substr(0, space)).c_str(),
                                         nullptr, 10);
    if (len == 0 || len > body.size()) break;
    std::string_view record = body.substr(space + 1, len - space - 1);
    if (!record.empty() && record.back() == '\n') record.remove_suffix(1);
    const std::size_t eq = record.find('=');
    if (eq != std::string_view::npos && record.substr(0, eq) == "path") {
      path = std::string(record.substr(eq + 1));
    }
    body.remove_prefix(len);
  }
  return path;
}

void PutOctal(char* dst, std::size_t len, std::uint64_t value) {
  std::snprintf(dst, len, "%0*llo", static_cast<int>(len - 1),
                static_cast<unsigned long long>(value));
}

std::string Header(const std::string& name, std::size_t size, char type) {
  std::string header(kBlock, '\0');
  std::memcpy(header.data(), name.data(), std::min<std::size_t>(name.size(), 100));
  PutOctal(header.data() + 100, 8, type == '5' ? 0755 : 0644);
  PutOctal(header.data() + 108, 8, 0);
  PutOctal(header.data() + 116, 8, 0);
  PutOctal(header.data() + 124, 12, size);
  PutOctal(header.data() + 136, 12, 0);
  header[156] = type;
  std::memcpy(header.data() + 257, "ustar", 5);
  std::memcpy(header.data() + 263, "00", 2);
  std::memset(header.data() + 148, ' ', 8);
  std::uint64_t sum = 0;
  for (unsigned char c : header) sum += c;
  std::snprintf(header.data() + 148, 8, "%06llo",
                static_cast<unsigned long long>(sum));
  header[155] = ' ';
  return header;
}

void Pad(std::string& out) {
  const std::size_t rem = out.size() % kBlock;
  if (rem != 0) out.append(kBlock - rem, '\0');
}

}  // namespace

std::string GunzipBytes(std::string_view compressed) {
  if (compressed.size() < 18 || static_cast<unsigned char>(compressed[0]) != 0x1f ||
      static_cast<unsigned char>(compressed[1]) != 0x8b) {
    Malformed("not a gzip stream");
  }
  z_stream zs{};
  if (inflateInit2(&zs, 16 + MAX_WBITS) != Z_OK) Malformed("zlib init failed");
  zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(compressed.data()));
  zs.avail_in = static_cast<uInt>(compressed.size());
  std::string out;
  char buf[64 * 1024];
  int rc = Z_OK;
  while (rc != Z_STREAM_END) {
    zs.next_out = reinterpret_cast<Bytef*>(buf);
    zs.avail_out = sizeof(buf);
    rc = inflate(&zs, Z_NO_FLUSH);
    if (rc != Z_OK && rc != Z_STREAM_END) {
      inflateEnd(&zs);
      Malformed("corrupt gzip stream");
    }
    out.append(buf, sizeof(buf) - zs.avail_out);
    if (rc == Z_OK && zs.avail_in == 0 && zs.avail_out != 0) {
      inflateEnd(&zs);
      Malformed("truncated gzip stream");
    }
  }
  inflateEnd(&zs);
  return out;
}

std::string GzipBytes(std::string_view raw) {
  z_stream zs{};
  if (deflateInit2(&zs, Z_BEST_COMPRESSION, Z_DEFLATED, 16 + MAX_WBITS, 8,
                   Z_DEFAULT_STRATEGY) != Z_OK) {
    throw Error(ErrorCode::kStorageError, "zlib deflate init failed");
  }
  zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(raw.data()));
  zs.avail_in = static_cast<uInt>(raw.size());
  std::string out;
  char buf[64 * 1024];
  int rc = Z_OK;
  while (rc != Z_STREAM_END) {
    zs.next_out = reinterpret_cast<Bytef*>(buf);
    zs.avail_out = sizeof(buf);
    rc = deflate(&zs, Z_FINISH);
    out.append(buf, sizeof(buf) - zs.avail_out);
  }
  deflateEnd(&zs);
  return out;
}

std::vector<ArchiveEntry> ReadTar(std::string_view tar) {
  std::vector<ArchiveEntry> entries;
  std::string long_name;
  std::size_t pos = 0;
  while (pos + kBlock <= tar.size()) {
    std::string_view header = tar.substr(pos, kBlock);
    if (AllZero(header)) break;
    if (!ChecksumOk(header)) Malformed("tar header checksum mismatch");
    const std::uint64_t size = Octal(header, 124, 12);
    const char type = header[156];
    pos += kBlock;
    if (pos + size > tar.size()) Malformed("tar entry exceeds archive size");
    std::string_view body = tar.substr(pos, size);
    pos += (size + kBlock - 1) / kBlock * kBlock;

    if (type == 'L') {
      long_name = Field(body, 0, body.size());
      continue;
    }
    if (type == 'x') {
      long_name = PaxPath(body);
      continue;
    }
    if (type == 'g') continue;

    std::string name = Field(header, 0, 100);
    if (header.substr(257, 5) == "ustar") {
      const std::string prefix = Field(header, 345, 155);
      if (!prefix.empty()) name = prefix + "/" + name;
    }
    if (!long_name.empty()) {
      name = long_name;
      long_name.clear();
    }
    while (name.rfind("./", 0) == 0) name.erase(0, 2);

    if (type == '5') {
      if (!name.empty() && name.back() == '/') name.pop_back();
      entries.push_back(ArchiveEntry{name, {}, true});
    } else if (type == '0' || type == '\0' || type == '7') {
      entries.push_back(ArchiveEntry{name, std::string(body), false});
    }
  }
  if (pos > tar.size()) Malformed("truncated tar stream");
  return entries;
}

std::string WriteTar(const std::vector<ArchiveEntry>& entries) {
  std::string out;
  for (const auto& e : entries) {
    const std::string name = e.is_directory ? e.path + "/" : e.path;
    if (name.size() > 100) {
      out += Header("././@LongLink", name.size() + 1, 'L');
      out += name;
      out.push_back('\0');
      Pad(out);
    }
    out += Header(name, e.is_directory ? 0 : e.data.size(),
                  e.is_directory ? '5' : '0');
    if (!e.is_directory) {
      out += e.data;
      Pad(out);
    }
  }
  out.append(2 * kBlock, '\0');
  return out;
}

std::vector<ArchiveEntry> ReadTarGz(std::string_view archive) {
  return ReadTar(GunzipBytes(archive));
}

std::string WriteTarGz(const std::vector<ArchiveEntry>& entries) {
  return GzipBytes(WriteTar(entries));
}

}  // namespace chartqa
