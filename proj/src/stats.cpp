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

#include "uxperf/stats.hpp"

#include <algorithm>
#include <cmath>

#include "uxperf/error.hpp"

namespace uxperf {

double median(std::vector<double> xs) {
  if (xs.empty()) {
    throw Error(Errc::EmptySample, "median of empty sample");
  }
  std::sort(xs.begin(), xs.end());
  const std::size_t n = xs.size();
  if (n % 2 == 1) return xs[n / 2];
  return 0.5 * (xs[n / 2 - 1] + xs[n / 2]);
}

double cliffs_delta(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.empty() || b.empty()) {
    throw Error(Errc::EmptySample, "cliffs_delta needs two nonempty samples");
  }
  std::vector<double> sorted_a = a;
  std::sort(sorted_a.begin(), sorted_a.end());
  long long net = 0;  // (#(x > y) - #(x < y)) over pairs (x in b, y in a)
  for (double x : b) {
    const auto lo = std::lower_bound(sorted_a.begin(), sorted_a.end(), x);
    const auto hi = std::upper_bound(lo, sorted_a.end(), x);
    const long long less = lo - sorted_a.begin();        // a values below x
    const long long greater = sorted_a.end() - hi;       // a values above x
    net += less - greater;
  }
  return static_cast<double>(net) /
         (static_cast<double>(a.size()) * static_cast<double>(b.size()));
}

std::vector<double> midranks(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> combined;
  combined.reserve(a.size() + b.size());
  combined.insert(combined.end(), a.begin(), a.end());
  combined.insert(combined.end(), b.begin(), b.end());

  std::vector<std::size_t> order(combined.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return combined[i] < combined[j]; });

  std::vector<double> ranks(combined.size(), 0.0);
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j < order.size() && combined[order[j]] == combined[order[i]]) ++j;
    const double shared = 0.5 * static_cast<double>(i + 1 + j);  // average of ranks i+1..j
    for (std::size_t k = i; k < j; ++k) ranks[order[k]] = shared;
    i = j;
  }
  return ranks;
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

namespace {

// Counts, over all C(n, k) k-subsets of `ranks`, how many have sum >= lo
// (into ge) and sum <= hi (into le). Depth-first with a running sum; the
// sizes handled here (n <= 16) keep this tiny.
struct SubsetTail {
  const std::vector<double>* ranks = nullptr;
  double lo = 0.0, hi = 0.0;
  long long ge = 0, le = 0, total = 0;

  void recurse(std::size_t next, std::size_t remaining, double sum) {
    if (remaining == 0) {
      ++total;
      if (sum >= lo) ++ge;
      if (sum <= hi) ++le;
      return;
    }
    for (std::size_t i = next; i + remaining <= ranks->size(); ++i) {
      recurse(i + 1, remaining - 1, sum + (*ranks)[i]);
    }
  }
};

RankSumResult exact_rank_sum(const std::vector<double>& ranks, std::size_t nb, double w_b,
                             RankSumAlternative alternative) {
  // Tolerance for "as extreme" comparisons; midranks are multiples of 0.5 so
  // any slack far below that is safe.
  const double eps = 1e-9;
  SubsetTail tail;
  tail.ranks = &ranks;
  tail.lo = w_b - eps;
  tail.hi = w_b + eps;
  tail.recurse(0, nb, 0.0);

  RankSumResult r;
  r.rank_sum_b = w_b;
  r.exact = true;
  const double total = static_cast<double>(tail.total);
  if (alternative == RankSumAlternative::BGreater) {
    r.p_value = static_cast<double>(tail.ge) / total;
  } else {
    r.p_value = std::min(
        1.0, 2.0 * static_cast<double>(std::min(tail.ge, tail.le)) / total);
  }
  return r;
}

RankSumResult approx_rank_sum(const std::vector<double>& ranks, std::size_t na,
                              std::size_t nb, double w_b, RankSumAlternative alternative) {
  const double n = static_cast<double>(ranks.size());
  const double mean = static_cast<double>(nb) * (n + 1.0) / 2.0;

  // Tie correction: sum of (t^3 - t) over tie groups of the combined sample.
  std::vector<double> sorted = ranks;
  std::sort(sorted.begin(), sorted.end());
  double tie_term = 0.0;
  std::size_t i = 0;
  while (i < sorted.size()) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    const double t = static_cast<double>(j - i);
    tie_term += t * t * t - t;
    i = j;
  }
  const double na_d = static_cast<double>(na);
  const double nb_d = static_cast<double>(nb);
  const double var = na_d * nb_d * (n + 1.0) / 12.0 -
                     na_d * nb_d * tie_term / (12.0 * n * (n - 1.0));

  RankSumResult r;
  r.rank_sum_b = w_b;
  r.exact = false;
  if (var <= 0.0) {
    r.p_value = 1.0;  // every observation tied: no rank information
    return r;
  }
  const double sd = std::sqrt(var);
  if (alternative == RankSumAlternative::BGreater) {
    const double z = (w_b - mean - 0.5) / sd;
    r.p_value = 1.0 - normal_cdf(z);
  } else {
    const double z = (std::abs(w_b - mean) - 0.5) / sd;
    r.p_value = std::min(1.0, 2.0 * (1.0 - normal_cdf(std::max(z, 0.0))));
  }
  return r;
}

}  // namespace

RankSumResult wilcoxon_rank_sum(const std::vector<double>& a, const std::vector<double>& b,
                                RankSumMode mode, RankSumAlternative alternative) {
  if (a.empty() || b.empty()) {
    throw Error(Errc::EmptySample, "rank-sum test needs two nonempty samples");
  }
  const std::size_t n = a.size() + b.size();
  if (mode == RankSumMode::Exact && n > kExactEnumerationCap) {
    throw Error(Errc::ExactInfeasible,
                "exact enumeration capped at " + std::to_string(kExactEnumerationCap) +
                    " combined observations, got " + std::to_string(n));
  }
  const bool exact = mode == RankSumMode::Exact ||
                     (mode == RankSumMode::Auto && n <= kExactEnumerationCap);

  const std::vector<double> ranks = midranks(a, b);
  double w_b = 0.0;
  for (std::size_t i = a.size(); i < ranks.size(); ++i) w_b += ranks[i];

  return exact ? exact_rank_sum(ranks, b.size(), w_b, alternative)
               : approx_rank_sum(ranks, a.size(), b.size(), w_b, alternative);
}

}  // namespace uxperf
