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

#include "uxperf/ssim.hpp"

namespace uxperf {

/// A frame pair counts as "changed" when its SSIM falls below drop_threshold;
/// the GUI counts as settled after stability_window consecutive unchanged
/// pairs (fewer suffice at the end of the recording, but at least one).
struct KeyFrameParams {
  double drop_threshold = 0.98;
  int stability_window = 5;

  void validate() const;  // throws InvalidConfig
};

/// First frame showing visual feedback: index i+1 for the smallest i with
/// series.values[i] < drop_threshold. Throws NoVisualResponse when the GUI
/// never visibly changed.
std::size_t detect_response_frame(const SsimSeries& series, const KeyFrameParams& kp);

struct FinishFrame {
  std::size_t index = 0;
  /// Set when the recording ends before stability could be confirmed
  /// (e.g. looping spinners); the metric is still usable but low-confidence.
  bool unstable_tail = false;
};

/// Frame at which the GUI settles: index i+1 for the largest changed pair i
/// followed only by unchanged pairs (up to stability_window of them). Falls
/// back to the last changed pair with unstable_tail set when no changed pair
/// has a confirmed stable suffix. Throws NoVisualResponse when nothing
/// changed at all.
FinishFrame detect_finish_frame(const SsimSeries& series, const KeyFrameParams& kp);

struct KeyFrames {
  std::size_t start_index = 0;  // always 0: frame 0 is the action frame
  std::size_t response_index = 0;
  std::size_t finish_index = 0;
  bool unstable_tail = false;
};

/// Convenience wrapper running both detectors on one series.
KeyFrames detect_key_frames(const SsimSeries& series, const KeyFrameParams& kp);

}  // namespace uxperf
