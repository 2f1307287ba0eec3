// Copyright (c) the uxperf authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <vector>

namespace uxperf {

/// Sample median; midpoint of the two central order statistics for even
/// sizes. Throws EmptySample.
double median(std::vector<double> xs);

/// Cliff's delta in [-1, 1]: fraction of (x in b, y in a) pairs with x > y
/// minus the fraction with x < y. Positive values mean b tends larger.
/// Computed by sorting one sample and binary-searching the other; tests pin
/// it against brute-force pair counting.
double cliffs_delta(const std::vector<double>& a, const std::vector<double>& b);

/// Midranks of the concatenation (a ++ b); tied values share the average of
/// the ranks they occupy.
std::vector<double> midranks(const std::vector<double>& a, const std::vector<double>& b);

enum class RankSumMode { Exact, Approximate, Auto };
enum class RankSumAlternative { TwoSided, BGreater };

/// Largest combined size for which exact enumeration is allowed.
inline constexpr std::size_t kExactEnumerationCap = 16;

struct RankSumResult {
  double rank_sum_b = 0.0;  // sum of b's midranks in the combined sample
  double p_value = 1.0;
  bool exact = false;
};

/// Wilcoxon rank-sum test on two independent samples. Exact mode enumerates
/// every C(|a|+|b|, |b|) assignment of the observed midranks (valid under
/// ties); approximate mode uses the normal approximation with tie-corrected
/// variance and a 0.5 continuity correction. Auto picks exact whenever
/// |a|+|b| <= kExactEnumerationCap.
/// Throws EmptySample and ExactInfeasible.
RankSumResult wilcoxon_rank_sum(const std::vector<double>& a, const std::vector<double>& b,
                                RankSumMode mode = RankSumMode::Auto,
                                RankSumAlternative alternative = RankSumAlternative::BGreater);

/// Standard normal CDF.
double normal_cdf(double z);

}  // namespace uxperf
