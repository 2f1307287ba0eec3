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

#include <string>
#include <vector>

#include "uxperf/frame.hpp"
#include "uxperf/screencast.hpp"

namespace uxperf {

/// Structural-similarity parameters. Windows are square, uniformly weighted,
/// laid out on a stride grid (non-overlapping by default).
struct SsimParams {
  int window = 8;
  double k1 = 0.01;
  double k2 = 0.03;
  double dynamic_range = 255.0;
  int stride = 8;
  /// Integer box-downscale factor applied to both frames before comparison.
  /// Values > 1 trade accuracy for throughput; 1 compares at native size.
  int downscale = 1;

  double c1() const { return (k1 * dynamic_range) * (k1 * dynamic_range); }
  double c2() const { return (k2 * dynamic_range) * (k2 * dynamic_range); }

  /// Throws InvalidConfig when a field is out of its legal range.
  void validate() const;
};

/// Mean SSIM over the window grid, in [-1, 1]. 1.0 exactly for identical
/// frames. Parallelized over windows; the final reduction runs in grid order
/// so results are bitwise identical for any thread count.
double ssim(const Image& a, const Image& b, const SsimParams& p);

/// Plain-loop reference implementation of ssim(). Kept for tests and the
/// kernel benchmark; must stay bitwise identical to ssim().
double ssim_serial(const Image& a, const Image& b, const SsimParams& p);

/// Consecutive-pair SSIM values for one screencast; element i compares
/// frames i and i+1.
struct SsimSeries {
  std::string screencast_id;
  std::vector<double> values;
};

/// Parallelized over frame pairs; bitwise identical to ssim_series_serial().
SsimSeries ssim_series(const Screencast& sc, const SsimParams& p);

/// Reference implementation of ssim_series().
SsimSeries ssim_series_serial(const Screencast& sc, const SsimParams& p);

}  // namespace uxperf
