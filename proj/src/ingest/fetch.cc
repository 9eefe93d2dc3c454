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

#include "chartqa/ingest/fetch.h"

#include <curl/curl.h>

#include <atomic>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "chartqa/core/error.h"
#include "chartqa/ingest/digest.h"

namespace chartqa {
namespace {

bool IsHttp(std::string_view s) {
  return s.rfind("http://", 0) == 0 || s.rfind("https://", 0) == 0;
}

std::size_t CollectBody(char* ptr, std::size_t size, std::size_t nmemb,
                        void* userdata) {
  static_cast<std::string*>(userdata)->append(ptr, size * nmemb);
  return size * nmemb;
}

std::once_flag g_curl_init;

std::string FetchHttp(const std::string& url) {
  std::call_once(g_curl_init, [] { curl_global_init(CURL_GLOBAL_DEFAULT); });
  std::unique_ptr<CURL, decltype(&curl_easy_cleanup)> curl(curl_easy_init(),
                                                          curl_easy_cleanup);
  if (!curl) throw Error(ErrorCode::kFetchError, "curl init failed");
  std::string body;
  curl_easy_setopt(curl.get(), CURLOPT_URL, url.c_str());
  curl_easy_setopt(curl.get(), CURLOPT_FOLLOWLOCATION, 1L);
  curl_easy_setopt(curl.get(), CURLOPT_FAILONERROR, 1L);
  curl_easy_setopt(curl.get(), CURLOPT_NOSIGNAL, 1L);
  curl_easy_setopt(curl.get(), CURLOPT_CONNECTTIMEOUT, 30L);
  curl_easy_setopt(curl.get(), CURLOPT_WRITEFUNCTION, CollectBody);
  curl_easy_setopt(curl.get(), CURLOPT_WRITEDATA, &body);
  const CURLcode rc = curl_easy_perform(curl.get());
  if (rc != CURLE_OK) {
    throw Error(ErrorCode::kFetchError, url + ": " + curl_easy_strerror(rc));
  }
  return body;
}

std::string ReadLocal(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kFetchError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kFetchError, "read error on " + path);
  return ss.str();
}

}  // namespace

std::string FetchArchive(std::string_view url_or_path,
                         const std::optional<std::string>& expected_sha256) {
  const std::string location(url_or_path);
  std::string bytes;
  if (IsHttp(location)) {
    bytes = FetchHttp(location);
  } else if (location.rfind("file://", 0) == 0) {
    bytes = ReadLocal(location.substr(7));
  } else {
    bytes = ReadLocal(location);
  }
  if (expected_sha256 && !expected_sha256->empty()) {
    const std::string actual = Sha256Hex(bytes);
    if (actual != *expected_sha256) {
      throw Error(ErrorCode::kChecksumMismatch,
                  location + ": expected " + *expected_sha256 + ", got " +
                      actual);
    }
  }
  return bytes;
}

std::string ResolveLocation(std::string_view index_location,
                            std::string_view url) {
  if (IsHttp(url) || url.rfind("file://", 0) == 0 ||
      (!url.empty() && url.front() == '/')) {
    return std::string(url);
  }
  std::string base(index_location);
  const std::size_t slash = base.find_last_of('/');
  if (slash == std::string::npos) return std::string(url);
  return base.substr(0, slash + 1) + std::string(url);
}

std::vector<std::string> FetchAll(const std::vector<FetchRequest>& requests,
                                  int jobs) {
  std::vector<std::string> results(requests.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= requests.size() || failed) return;
      try {
        results[i] = FetchArchive(requests[i].location, requests[i].sha256);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        failed = true;
        return;
      }
    }
  };
  const int n = std::max(1, std::min<int>(jobs, static_cast<int>(requests.size())));
  std::vector<std::thread> threads;
  for (int t = 0; t < n; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  if (first_error) std::rethrow_exception(first_error);
  return results;
}

}  // namespace chartqa
