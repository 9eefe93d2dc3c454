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

#include "chartqa/ecosystem/wilcoxon.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "chartqa/core/error.h"

namespace chartqa {
namespace {

// Exact two-sided p over 2^n sign flips, on doubled (integral) ranks.
double ExactP(const std::vector<int>& doubled_ranks, long long w2) {
  const long long total =
      std::accumulate(doubled_ranks.begin(), doubled_ranks.end(), 0LL);
  std::vector<double> ways(static_cast<std::size_t>(total) + 1, 0.0);
  ways[0] = 1.0;
  long long reach = 0;
  for (int r : doubled_ranks) {
    for (long long s = reach; s >= 0; --s) {
      if (ways[s] != 0.0) ways[s + r] += ways[s];
    }
    reach += r;
  }
  double hit = 0;
  for (long long s = 0; s <= total; ++s) {
    if (std::min(s, total - s) <= w2) hit += ways[s];
  }
  return hit / std::ldexp(1.0, static_cast<int>(doubled_ranks.size()));
}

}  // namespace

WilcoxonResult WilcoxonSignedRank(const std::vector<double>& x,
                                  const std::vector<double>& y) {
  if (x.size() != y.size()) {
    throw Error(ErrorCode::kInvalidArgument, "samples differ in length");
  }
  if (x.empty()) throw Error(ErrorCode::kInvalidArgument, "empty samples");

  std::vector<double> d;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != y[i]) d.push_back(x[i] - y[i]);
  }
  if (d.empty()) {
    throw Error(ErrorCode::kAllZeroDifferences, "all differences are zero");
  }
  const int n = static_cast<int>(d.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::fabs(d[a]) < std::fabs(d[b]);
  });

  // doubled mid-ranks: tie block [i, j) gets (i + 1 + j)
  std::vector<int> rank2(n);
  double tie_term = 0;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && std::fabs(d[order[j]]) == std::fabs(d[order[i]])) ++j;
    for (int k = i; k < j; ++k) rank2[order[k]] = i + 1 + j;
    const double t = j - i;
    tie_term += t * t * t - t;
    i = j;
  }

  long long plus2 = 0, minus2 = 0;
  for (int i = 0; i < n; ++i) (d[i] > 0 ? plus2 : minus2) += rank2[i];

  WilcoxonResult r;
  r.n = n;
  r.w_plus = plus2 / 2.0;
  r.w_minus = minus2 / 2.0;
  r.w = std::min(r.w_plus, r.w_minus);
  if (n <= kWilcoxonExactLimit) {
    r.exact = true;
    r.p_value = ExactP(rank2, std::min(plus2, minus2));
  } else {
    const double nn = n;
    const double mean = nn * (nn + 1) / 4.0;
    const double var = nn * (nn + 1) * (2 * nn + 1) / 24.0 - tie_term / 48.0;
    if (var <= 0) {
      r.p_value = 1.0;
    } else {
      const double z = (r.w - mean) / std::sqrt(var);
      r.p_value = std::min(1.0, std::erfc(-z / std::sqrt(2.0)));
    }
  }
  return r;
}

}  // namespace chartqa
