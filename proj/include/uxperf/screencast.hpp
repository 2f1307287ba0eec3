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

#include <optional>
#include <string>
#include <vector>

#include "uxperf/frame.hpp"

namespace uxperf {

enum class ActionType { Tap, Scroll, Swipe, Draw, Launch };

const char* to_string(ActionType t) noexcept;
ActionType action_type_from_string(const std::string& s);  // throws MalformedMetadata

/// Metadata recorded by the GUI test harness for one user interaction run.
/// Launch interactions carry no screen coordinates.
struct InteractionMeta {
  std::string app_id;
  std::string scenario_id;
  std::string interaction_id;
  ActionType action_type = ActionType::Tap;
  std::optional<int> action_x;
  std::optional<int> action_y;
  double action_timestamp_ms = 0.0;
  std::string os_version;
  int run_index = 0;
  double device_refresh_hz = 60.0;
};

/// One user interaction's recording: metadata plus ordered frames.
/// Frame 0 is the frame in which the user action was issued.
struct Screencast {
  InteractionMeta meta;
  std::vector<Frame> frames;

  /// Corpus-unique identity: "<os>/<app>/<scenario>/<interaction>/run_<k>".
  std::string id() const;
};

struct Violation {
  std::string code;
  std::string message;
};

struct ValidationReport {
  std::string screencast_id;
  std::vector<Violation> violations;

  bool accepted() const { return violations.empty(); }
  bool has(const std::string& code) const;
};

/// Checks every structural invariant and returns one entry per violation.
/// Never throws; a clean screencast yields an empty report.
ValidationReport validate_screencast(const Screencast& sc, int runs_per_version = 20);

}  // namespace uxperf
