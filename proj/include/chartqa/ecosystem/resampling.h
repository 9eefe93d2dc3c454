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

#ifndef CHARTQA_ECOSYSTEM_RESAMPLING_H_
#define CHARTQA_ECOSYSTEM_RESAMPLING_H_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "chartqa/analysis/duplicates.h"
#include "chartqa/ingest/snapshot.h"

namespace chartqa {

inline constexpr const char* kResamplingPrng = "mt19937_64+splitmix64";

// Sub-seed for one iteration; independent of scheduling.
std::uint64_t IterationSeed(std::uint64_t seed, std::uint64_t iteration);

// Uniform integer in [0, bound) by rejection; portable across libraries.
std::uint64_t UniformBelow(std::mt19937_64& rng, std::uint64_t bound);

// k distinct indices of [0, n) in draw order (partial Fisher-Yates).
std::vector<std::size_t> SampleWithoutReplacement(std::mt19937_64& rng,
                                                  std::size_t n,
                                                  std::size_t k);

struct ResampleResult {
  double min_p = 1;
  std::uint64_t iterations = 0;  // requested
  std::uint64_t tests_run = 0;
  std::uint64_t all_zero_skipped = 0;
  std::uint64_t seed = 0;
  std::string prng = kResamplingPrng;
};

// Draws |n2| values of n1 without replacement per iteration and runs the
// signed-rank test against n2 in the given order; returns the smallest p.
// Iterations whose differences are all zero are skipped. threads == 0
// picks the hardware concurrency. Throws Error(kInvalidArgument) on bad
// sizes and Error(kAllZeroDifferences) when every iteration was skipped.
ResampleResult ResampledGroupTest(const std::vector<double>& n1_values,
                                  const std::vector<double>& n2_values,
                                  std::uint64_t iterations, std::uint64_t seed,
                                  unsigned threads = 0);

struct NotificationGroups {
  std::vector<StemName> n1_stems;
  std::vector<StemName> n2_stems;
  std::vector<double> n1;  // mean duplicate groups over the stem's versions
  std::vector<double> n2;
};

// n1: stems present when notifications went out; n2: stems first seen after
// that and present at the end of the observation. Both are restricted to
// stems still present in the final snapshot, whose packages supply the
// values. Archives that fail to parse are left out of the mean.
NotificationGroups BuildNotificationGroups(const Snapshot& notified,
                                           const Snapshot& observed_end,
                                           const Snapshot& final_snapshot,
                                           const DuplicateConfig& config);

}  // namespace chartqa

#endif  // CHARTQA_ECOSYSTEM_RESAMPLING_H_
