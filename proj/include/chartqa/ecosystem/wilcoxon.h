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

#ifndef CHARTQA_ECOSYSTEM_WILCOXON_H_
#define CHARTQA_ECOSYSTEM_WILCOXON_H_

#include <vector>

namespace chartqa {

struct WilcoxonResult {
  double w = 0;  // min(W+, W-)
  double w_plus = 0;
  double w_minus = 0;
  int n = 0;  // non-zero differences
  double p_value = 1;
  bool exact = false;
};

inline constexpr int kWilcoxonExactLimit = 12;

// Two-sided signed-rank test on the paired differences x - y. Zero
// differences are dropped and ties get mid-ranks. For n <= 12 the p-value
// is P(min(W+, W-) <= w) over all sign assignments of the observed ranks;
// above that a tie-corrected normal approximation without continuity
// correction is used.
// Throws Error(kInvalidArgument) on length mismatch or empty input and
// Error(kAllZeroDifferences) when every pair is equal.
WilcoxonResult WilcoxonSignedRank(const std::vector<double>& x,
                                  const std::vector<double>& y);

}  // namespace chartqa

#endif  // CHARTQA_ECOSYSTEM_WILCOXON_H_
