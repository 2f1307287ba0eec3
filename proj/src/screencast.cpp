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

#include "uxperf/screencast.hpp"

#include <algorithm>

#include "uxperf/error.hpp"

namespace uxperf {

const char* to_string(ActionType t) noexcept {
  switch (t) {
    case ActionType::Tap: return "tap";
    case ActionType::Scroll: return "scroll";
    case ActionType::Swipe: return "swipe";
    case ActionType::Draw: return "draw";
    case ActionType::Launch: return "launch";
  }
  return "tap";
}

ActionType action_type_from_string(const std::string& s) {
  if (s == "tap") return ActionType::Tap;
  if (s == "scroll") return ActionType::Scroll;
  if (s == "swipe") return ActionType::Swipe;
  if (s == "draw") return ActionType::Draw;
  if (s == "launch") return ActionType::Launch;
  throw Error(Errc::MalformedMetadata, "unknown action_type \"" + s + "\"");
}

std::string Screencast::id() const {
  return meta.os_version + "/" + meta.app_id + "/" + meta.scenario_id + "/" +
         meta.interaction_id + "/run_" + std::to_string(meta.run_index);
}

bool ValidationReport::has(const std::string& code) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.code == code; });
}

ValidationReport validate_screencast(const Screencast& sc, int runs_per_version) {
  ValidationReport report;
  report.screencast_id = sc.id();
  auto add = [&](std::string code, std::string message) {
    report.violations.push_back({std::move(code), std::move(message)});
  };

  if (sc.frames.size() < 2) {
    add("TOO_FEW_FRAMES", "screencast has " + std::to_string(sc.frames.size()) +
                              " frame(s); SSIM analysis needs at least 2");
  }
  for (std::size_t i = 0; i + 1 < sc.frames.size(); ++i) {
    if (!(sc.frames[i].pts_ms < sc.frames[i + 1].pts_ms)) {
      add("PTS_NOT_INCREASING",
          "pts not strictly increasing at frame " + std::to_string(i + 1));
      break;
    }
  }
  for (std::size_t i = 0; i < sc.frames.size(); ++i) {
    if (sc.frames[i].index != i) {
      add("FRAME_INDEX_GAP", "frame ordinal " + std::to_string(i) + " carries index " +
                                 std::to_string(sc.frames[i].index));
      break;
    }
  }
  if (!sc.frames.empty()) {
    const Image& first = sc.frames.front().pixels;
    if (first.width <= 0 || first.height <= 0) {
      add("EMPTY_FRAME", "frame 0 has no pixels");
    }
    for (std::size_t i = 1; i < sc.frames.size(); ++i) {
      if (!sc.frames[i].pixels.same_size(first)) {
        add("FRAME_DIMENSION_MISMATCH",
            "frame " + std::to_string(i) + " differs in size from frame 0");
        break;
      }
    }
  }

  const InteractionMeta& m = sc.meta;
  const bool has_coords = m.action_x.has_value() && m.action_y.has_value();
  const bool any_coords = m.action_x.has_value() || m.action_y.has_value();
  if (m.action_type == ActionType::Launch && any_coords) {
    add("ACTION_COORDS", "launch interactions must not carry screen coordinates");
  }
  if (m.action_type != ActionType::Launch && !has_coords) {
    add("ACTION_COORDS", "non-launch interactions must carry action_x/action_y");
  }
  if (m.run_index < 0 || m.run_index >= runs_per_version) {
    add("RUN_INDEX_RANGE", "run_index " + std::to_string(m.run_index) +
                               " outside [0, " + std::to_string(runs_per_version) + ")");
  }
  if (!(m.device_refresh_hz > 0.0)) {
    add("REFRESH_RATE", "device_refresh_hz must be positive");
  }
  return report;
}

}  // namespace uxperf
