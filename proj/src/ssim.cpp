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

#include "uxperf/ssim.hpp"

#include <algorithm>
#include <cstdint>

#include "uxperf/error.hpp"

namespace uxperf {

namespace {

// Integer box downscale by factor f (mean of each f x f block, floor dims).
Image downscale_image(const Image& src, int f) {
  Image dst(src.width / f, src.height / f);
  for (int y = 0; y < dst.height; ++y) {
    for (int x = 0; x < dst.width; ++x) {
      unsigned sum = 0;
      for (int dy = 0; dy < f; ++dy) {
        for (int dx = 0; dx < f; ++dx) {
          sum += src.at(x * f + dx, y * f + dy);
        }
      }
      dst.at(x, y) = static_cast<std::uint8_t>(sum / static_cast<unsigned>(f * f));
    }
  }
  return dst;
}

// SSIM of one window at (x0, y0). Uniform weighting, population moments.
// Pixel traversal is row-major so the accumulation order is fixed.
double window_ssim(const Image& a, const Image& b, int x0, int y0, int win, double c1,
                   double c2) {
  double sa = 0.0, sb = 0.0, saa = 0.0, sbb = 0.0, sab = 0.0;
  for (int y = y0; y < y0 + win; ++y) {
    const std::uint8_t* pa = a.data.data() + static_cast<std::size_t>(y) * a.width + x0;
    const std::uint8_t* pb = b.data.data() + static_cast<std::size_t>(y) * b.width + x0;
    for (int x = 0; x < win; ++x) {
      const double va = pa[x];
      const double vb = pb[x];
      sa += va;
      sb += vb;
      saa += va * va;
      sbb += vb * vb;
      sab += va * vb;
    }
  }
  const double n = static_cast<double>(win) * win;
  const double mu_a = sa / n;
  const double mu_b = sb / n;
  const double var_a = saa / n - mu_a * mu_a;
  const double var_b = sbb / n - mu_b * mu_b;
  const double cov = sab / n - mu_a * mu_b;
  const double num = (2.0 * mu_a * mu_b + c1) * (2.0 * cov + c2);
  const double den = (mu_a * mu_a + mu_b * mu_b + c1) * (var_a + var_b + c2);
  return num / den;
}

struct WindowGrid {
  int nx = 0;
  int ny = 0;
  std::size_t count() const { return static_cast<std::size_t>(nx) * ny; }
};

WindowGrid window_grid(int width, int height, const SsimParams& p) {
  WindowGrid g;
  g.nx = (width - p.window) / p.stride + 1;
  g.ny = (height - p.window) / p.stride + 1;
  return g;
}

void check_pair(const Image& a, const Image& b, const SsimParams& p) {
  p.validate();
  if (!a.same_size(b)) {
    throw Error(Errc::DimensionMismatch, "frame sizes differ");
  }
  const int w = a.width / p.downscale;
  const int h = a.height / p.downscale;
  if (w < p.window || h < p.window) {
    throw Error(Errc::FrameTooSmall, "frame smaller than SSIM window after downscale");
  }
}

}  // namespace

void SsimParams::validate() const {
  if (window < 2) throw Error(Errc::InvalidConfig, "ssim window must be >= 2");
  if (!(k1 > 0.0 && k1 < 1.0)) throw Error(Errc::InvalidConfig, "k1 must be in (0, 1)");
  if (!(k2 > 0.0 && k2 < 1.0)) throw Error(Errc::InvalidConfig, "k2 must be in (0, 1)");
  if (!(dynamic_range > 0.0)) throw Error(Errc::InvalidConfig, "dynamic_range must be > 0");
  if (stride < 1) throw Error(Errc::InvalidConfig, "stride must be >= 1");
  if (downscale < 1) throw Error(Errc::InvalidConfig, "downscale must be >= 1");
}

double ssim(const Image& a, const Image& b, const SsimParams& p) {
  check_pair(a, b, p);
  const Image& fa = p.downscale > 1 ? downscale_image(a, p.downscale) : a;
  const Image& fb = p.downscale > 1 ? downscale_image(b, p.downscale) : b;
  const WindowGrid grid = window_grid(fa.width, fa.height, p);
  const double c1 = p.c1();
  const double c2 = p.c2();

  // Per-window values land in a fixed grid slot; the reduction below runs in
  // grid order, so the result does not depend on the thread count.
  std::vector<double> per_window(grid.count());
#pragma omp parallel for schedule(static)
  for (long long w = 0; w < static_cast<long long>(grid.count()); ++w) {
    const int wy = static_cast<int>(w) / grid.nx;
    const int wx = static_cast<int>(w) % grid.nx;
    per_window[static_cast<std::size_t>(w)] =
        window_ssim(fa, fb, wx * p.stride, wy * p.stride, p.window, c1, c2);
  }
  double sum = 0.0;
  for (double v : per_window) sum += v;
  return std::clamp(sum / static_cast<double>(grid.count()), -1.0, 1.0);
}

double ssim_serial(const Image& a, const Image& b, const SsimParams& p) {
  check_pair(a, b, p);
  const Image& fa = p.downscale > 1 ? downscale_image(a, p.downscale) : a;
  const Image& fb = p.downscale > 1 ? downscale_image(b, p.downscale) : b;
  const WindowGrid grid = window_grid(fa.width, fa.height, p);
  const double c1 = p.c1();
  const double c2 = p.c2();

  double sum = 0.0;
  for (int wy = 0; wy < grid.ny; ++wy) {
    for (int wx = 0; wx < grid.nx; ++wx) {
      sum += window_ssim(fa, fb, wx * p.stride, wy * p.stride, p.window, c1, c2);
    }
  }
  return std::clamp(sum / static_cast<double>(grid.count()), -1.0, 1.0);
}

SsimSeries ssim_series(const Screencast& sc, const SsimParams& p) {
  if (sc.frames.size() < 2) {
    throw Error(Errc::TooFewFrames, sc.id() + ": SSIM series needs at least 2 frames");
  }
  SsimSeries series;
  series.screencast_id = sc.id();
  series.values.resize(sc.frames.size() - 1);
  // Pairs are independent; each one uses the serial kernel to avoid nesting.
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < static_cast<long long>(series.values.size()); ++i) {
    series.values[static_cast<std::size_t>(i)] =
        ssim_serial(sc.frames[static_cast<std::size_t>(i)].pixels,
                    sc.frames[static_cast<std::size_t>(i) + 1].pixels, p);
  }
  return series;
}

SsimSeries ssim_series_serial(const Screencast& sc, const SsimParams& p) {
  if (sc.frames.size() < 2) {
    throw Error(Errc::TooFewFrames, sc.id() + ": SSIM series needs at least 2 frames");
  }
  SsimSeries series;
  series.screencast_id = sc.id();
  series.values.reserve(sc.frames.size() - 1);
  for (std::size_t i = 0; i + 1 < sc.frames.size(); ++i) {
    series.values.push_back(ssim_serial(sc.frames[i].pixels, sc.frames[i + 1].pixels, p));
  }
  return series;
}

}  // namespace uxperf
