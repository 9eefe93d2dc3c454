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

#include "chartqa/ecosystem/resampling.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <thread>

#include "chartqa/core/error.h"
#include "chartqa/ecosystem/wilcoxon.h"

namespace chartqa {
namespace {

std::uint64_t SplitMix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

struct Partial {
  double min_p = 1;
  std::uint64_t done = 0;
  std::uint64_t skipped = 0;
};

void RunRange(const std::vector<double>& n1, const std::vector<double>& n2,
              std::uint64_t seed, std::uint64_t begin, std::uint64_t end,
              Partial& out) {
  std::vector<double> x(n2.size());
  for (std::uint64_t i = begin; i < end; ++i) {
    std::mt19937_64 rng(IterationSeed(seed, i));
    const auto idx = SampleWithoutReplacement(rng, n1.size(), n2.size());
    for (std::size_t k = 0; k < idx.size(); ++k) x[k] = n1[idx[k]];
    try {
      out.min_p = std::min(out.min_p, WilcoxonSignedRank(x, n2).p_value);
      ++out.done;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kAllZeroDifferences) throw;
      ++out.skipped;
    }
  }
}

}  // namespace

std::uint64_t IterationSeed(std::uint64_t seed, std::uint64_t iteration) {
  std::uint64_t state = seed;
  std::uint64_t mixed = SplitMix64(state);
  state = mixed ^ iteration;
  return SplitMix64(state);
}

std::uint64_t UniformBelow(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = -bound % bound;  // 2^64 mod bound
  for (;;) {
    const std::uint64_t v = rng();
    if (v >= limit) return v % bound;
  }
}

std::vector<std::size_t> SampleWithoutReplacement(std::mt19937_64& rng,
                                                  std::size_t n,
                                                  std::size_t k) {
  std::vector<std::size_t> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + UniformBelow(rng, n - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  return pool;
}

ResampleResult ResampledGroupTest(const std::vector<double>& n1_values,
                                  const std::vector<double>& n2_values,
                                  std::uint64_t iterations, std::uint64_t seed,
                                  unsigned threads) {
  if (n2_values.empty() || n2_values.size() > n1_values.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "need 1 <= |n2| <= |n1| for resampling");
  }
  if (iterations == 0) {
    throw Error(ErrorCode::kInvalidArgument, "iterations must be >= 1");
  }
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<std::uint64_t>(threads, iterations));

  std::vector<Partial> parts(threads);
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  const std::uint64_t chunk = iterations / threads;
  const std::uint64_t extra = iterations % threads;
  std::uint64_t begin = 0;
  for (unsigned t = 0; t < threads; ++t) {
    const std::uint64_t end = begin + chunk + (t < extra ? 1 : 0);
    pool.emplace_back([&, t, begin, end] {
      try {
        RunRange(n1_values, n2_values, seed, begin, end, parts[t]);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
    begin = end;
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  ResampleResult result;
  result.seed = seed;
  result.iterations = iterations;
  for (const auto& p : parts) {
    result.min_p = std::min(result.min_p, p.min_p);
    result.tests_run += p.done;
    result.all_zero_skipped += p.skipped;
  }
  if (result.tests_run == 0) {
    throw Error(ErrorCode::kAllZeroDifferences,
                "every resampled iteration had only zero differences");
  }
  return result;
}

NotificationGroups BuildNotificationGroups(const Snapshot& notified,
                                           const Snapshot& observed_end,
                                           const Snapshot& final_snapshot,
                                           const DuplicateConfig& config) {
  auto stems_of = [](const Snapshot& s) {
    std::set<StemName> out;
    for (const auto& e : s.index.entries) out.insert(e.chart.stem);
    return out;
  };
  const std::set<StemName> before = stems_of(notified);
  const std::set<StemName> after = stems_of(observed_end);

  std::map<StemName, std::pair<double, int>> dupes;
  for (const auto& e : final_snapshot.index.entries) {
    auto it = final_snapshot.packages.find(e.chart.file_name);
    if (it == final_snapshot.packages.end()) continue;
    auto& [sum, n] = dupes[e.chart.stem];
    sum += static_cast<double>(DetectDuplicates(it->second, config).groups.size());
    ++n;
  }

  NotificationGroups g;
  for (const auto& [stem, acc] : dupes) {
    const double mean = acc.first / acc.second;
    if (before.count(stem)) {
      g.n1_stems.push_back(stem);
      g.n1.push_back(mean);
    } else if (after.count(stem)) {
      g.n2_stems.push_back(stem);
      g.n2.push_back(mean);
    }
  }
  return g;
}

}  // namespace chartqa
