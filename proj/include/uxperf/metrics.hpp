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

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "uxperf/keyframes.hpp"
#include "uxperf/screencast.hpp"
#include "uxperf/ssim.hpp"

namespace uxperf {

/// The four user-perceived performance metrics. Launch interactions carry
/// LaunchTime; everything else carries ResponseTime and FinishTime.
/// DroppedFrames applies to all interactions.
enum class MetricKind { ResponseTime, FinishTime, LaunchTime, DroppedFrames };

const char* to_string(MetricKind m) noexcept;
MetricKind metric_kind_from_string(const std::string& s);  // throws InvalidConfig

/// Metrics applicable to an interaction of the given action type.
std::vector<MetricKind> applicable_metrics(ActionType action);

enum class MetricFlag { NoVisualResponse, UnstableTail };

/// Extracted metrics for one screencast. Time metrics are absent when the
/// GUI never visibly changed (NoVisualResponse flag).
struct InteractionMetrics {
  std::string screencast_id;
  std::optional<double> response_time_ms;
  std::optional<double> finish_time_ms;
  std::optional<double> launch_time_ms;
  long long dropped_frames = 0;
  std::set<MetricFlag> flags;
  // Detected key frames, kept for report drill-downs.
  std::optional<std::size_t> response_index;
  std::optional<std::size_t> finish_index;
};

/// Default slack on the vsync period when counting dropped frames; absorbs
/// capture-pipeline timestamp jitter. Set to 0 for the strict reading of the
/// floor formula (exact gap thresholds).
inline constexpr double kDefaultGapEpsilon = 0.05;

/// Total frames missed relative to the vsync cadence: per adjacent gap dt,
/// max(0, floor(dt / (vsync * (1 + eps))) - 1), summed over the sequence.
long long count_dropped_frames(const std::vector<double>& pts_ms, double refresh_hz,
                               double gap_epsilon = kDefaultGapEpsilon);

/// Runs key-frame detection and produces all applicable metrics for one
/// screencast. Throws TooFewFrames below two frames.
InteractionMetrics extract_metrics(const Screencast& sc, const SsimParams& sp,
                                   const KeyFrameParams& kp,
                                   double gap_epsilon = kDefaultGapEpsilon);

/// One persisted extraction result: interaction identity plus metrics.
struct MetricsRecord {
  std::string interaction_id;
  std::string app_id;
  std::string scenario_id;
  ActionType action_type = ActionType::Tap;
  std::string os_version;
  int run_index = 0;
  InteractionMetrics metrics;
};

MetricsRecord make_record(const Screencast& sc, const InteractionMetrics& m);

/// Line-delimited JSON persistence for extraction results.
void write_records(const std::vector<MetricsRecord>& records,
                   const std::filesystem::path& path);
std::vector<MetricsRecord> read_records(const std::filesystem::path& path);

/// Per-run values of one metric for one interaction under one OS version,
/// ordered by run_index.
struct MetricSamples {
  std::string interaction_id;
  MetricKind metric = MetricKind::ResponseTime;
  std::string os_version;
  std::vector<double> values;
};

struct SampleCollection {
  std::vector<MetricSamples> samples;
  /// Runs excluded from time-metric samples because the detector saw no
  /// visual change.
  long long excluded_no_visual_response = 0;
};

inline constexpr int kDefaultMinRuns = 5;

/// Groups records into MetricSamples per (interaction, metric, os_version).
/// Throws InsufficientRuns when any group ends up with fewer than min_runs
/// usable values.
SampleCollection collect_samples(const std::vector<MetricsRecord>& records,
                                 int min_runs = kDefaultMinRuns);

struct SkippedGroup {
  std::string interaction_id;
  MetricKind metric;
  std::string os_version;
  std::string reason;
};

/// Like collect_samples but drops under-populated groups into `skipped`
/// instead of throwing; used by the comparison pipeline.
SampleCollection collect_samples_lenient(const std::vector<MetricsRecord>& records,
                                         int min_runs, std::vector<SkippedGroup>* skipped);

}  // namespace uxperf
