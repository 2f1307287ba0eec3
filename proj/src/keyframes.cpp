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

#include "uxperf/keyframes.hpp"

#include <algorithm>

#include "uxperf/error.hpp"

namespace uxperf {

void KeyFrameParams::validate() const {
  if (!(drop_threshold > 0.0 && drop_threshold < 1.0)) {
    throw Error(Errc::InvalidConfig, "drop_threshold must be in (0, 1)");
  }
  if (stability_window < 1) {
    throw Error(Errc::InvalidConfig, "stability_window must be >= 1");
  }
}

std::size_t detect_response_frame(const SsimSeries& series, const KeyFrameParams& kp) {
  kp.validate();
  if (series.values.empty()) {
    throw Error(Errc::EmptySample, "empty SSIM series");
  }
  for (std::size_t i = 0; i < series.values.size(); ++i) {
    if (series.values[i] < kp.drop_threshold) return i + 1;
  }
  throw Error(Errc::NoVisualResponse,
              series.screencast_id + ": no SSIM value below threshold");
}

FinishFrame detect_finish_frame(const SsimSeries& series, const KeyFrameParams& kp) {
  kp.validate();
  if (series.values.empty()) {
    throw Error(Errc::EmptySample, "empty SSIM series");
  }
  const auto& v = series.values;
  const double th = kp.drop_threshold;

  // A changed pair i is settled when the (up to) stability_window pairs that
  // follow it all sit at or above the threshold; at least one such pair must
  // exist, otherwise stability cannot be confirmed.
  auto settled = [&](std::size_t i) {
    const std::size_t remaining = v.size() - 1 - i;
    const std::size_t need = std::min<std::size_t>(kp.stability_window, remaining);
    if (need == 0) return false;
    for (std::size_t k = i + 1; k <= i + need; ++k) {
      if (v[k] < th) return false;
    }
    return true;
  };

  bool any_change = false;
  std::size_t last_change = 0;
  for (std::size_t j = v.size(); j-- > 0;) {
    if (v[j] < th) {
      if (!any_change) {
        any_change = true;
        last_change = j;
      }
      if (settled(j)) return FinishFrame{j + 1, false};
    }
  }
  if (!any_change) {
    throw Error(Errc::NoVisualResponse,
                series.screencast_id + ": no SSIM value below threshold");
  }
  return FinishFrame{last_change + 1, true};
}

KeyFrames detect_key_frames(const SsimSeries& series, const KeyFrameParams& kp) {
  KeyFrames kf;
  kf.response_index = detect_response_frame(series, kp);
  const FinishFrame fin = detect_finish_frame(series, kp);
  kf.finish_index = fin.index;
  kf.unstable_tail = fin.unstable_tail;
  return kf;
}

}  // namespace uxperf
