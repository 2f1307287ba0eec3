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
#include <utility>

#include "uxperf/metrics.hpp"
#include "uxperf/stats.hpp"

namespace uxperf {

/// Perception level of a metric value. Bands partition [0, inf) per metric
/// through three configurable cut points.
enum class SeverityBand { Excellent, Good, NoticeableLag, SevereLag };

const char* to_string(SeverityBand b) noexcept;
SeverityBand severity_band_from_string(const std::string& s);  // throws InvalidConfig

/// Half-open band boundaries: [0,c1) Excellent, [c1,c2) Good,
/// [c2,c3) NoticeableLag, [c3,inf) SevereLag.
struct SeverityCuts {
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;

  void validate() const;  // throws InvalidConfig unless 0 < c1 < c2 < c3
};

/// Default cut points, grounded in common HCI perception thresholds.
SeverityCuts default_severity_cuts(MetricKind metric);

SeverityBand classify_severity(double value, const SeverityCuts& cuts);

/// Decision thresholds for one metric. theta is the minimum median
/// degradation considered noticeable (ms for time metrics, frames for
/// dropped frames).
struct MetricConfig {
  MetricKind metric = MetricKind::ResponseTime;
  double theta = 0.0;
  double alpha = 0.05;
  double delta_min = 0.147;  // conventional "negligible" effect-size boundary

  void validate() const;  // throws InvalidConfig
};

double default_theta(MetricKind metric);

/// Median key-frame summary attached by the comparison pipeline for report
/// drill-downs; not produced by the detectors themselves.
struct KeyFrameSummary {
  double response_index = 0.0;  // median over runs, may be half-integral
  double finish_index = 0.0;
  double response_ms = 0.0;
  double finish_ms = 0.0;
};

/// Outcome of one metric comparison between OS versions, with every
/// intermediate quantity recorded.
struct RegressionVerdict {
  std::string interaction_id;
  MetricKind metric = MetricKind::ResponseTime;
  double p_value = 1.0;
  double cliffs_delta = 0.0;
  double median_base = 0.0;
  double median_updated = 0.0;
  double median_diff = 0.0;
  double theta = 0.0;
  bool regressed = false;
  SeverityBand severity_base = SeverityBand::Excellent;
  SeverityBand severity_updated = SeverityBand::Excellent;
  std::pair<int, int> sample_sizes{0, 0};
  std::optional<KeyFrameSummary> key_frames_base;
  std::optional<KeyFrameSummary> key_frames_updated;
};

/// Flags a regression only when the degradation is statistically significant
/// (one-sided rank-sum, updated greater), non-negligible in effect size, and
/// larger than the perceptual threshold theta in median.
/// Throws MetricMismatch and InsufficientRuns.
RegressionVerdict detect_regression(const MetricSamples& base, const MetricSamples& updated,
                                    const MetricConfig& cfg, const SeverityCuts& cuts,
                                    int min_runs = kDefaultMinRuns);

/// Statistical-only detector (rank-sum + Cliff's delta, no perceptual
/// threshold); the evaluation harness uses it as the comparison baseline.
RegressionVerdict baseline_detect(const MetricSamples& base, const MetricSamples& updated,
                                  double alpha, double delta_min = 0.147,
                                  int min_runs = kDefaultMinRuns);

}  // namespace uxperf
