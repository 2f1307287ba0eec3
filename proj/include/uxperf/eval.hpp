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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "uxperf/regression.hpp"
#include "uxperf/synth.hpp"

namespace uxperf {

/// Mean absolute error of metric extraction against ground truth. Dropped
/// frames are scored only on interactions whose true count is positive;
/// mae is empty when no pair was comparable.
struct ExtractionAccuracy {
  struct PerMetric {
    std::optional<double> mae;
    long long compared = 0;
    /// Truth exists but the extractor produced no value (e.g. flagged
    /// NoVisualResponse).
    long long missing_predictions = 0;
  };
  std::map<MetricKind, PerMetric> per_metric;
};

/// Confusion counts and derived scores for one regression type.
struct DetectionStats {
  long long tp = 0, fp = 0, fn = 0, tn = 0;

  std::optional<double> precision() const;
  std::optional<double> recall() const;
  std::optional<double> f1() const;
};

struct DetectionAccuracy {
  std::map<MetricKind, DetectionStats> per_metric;
  DetectionStats overall;  // micro-aggregated counts

  /// Unweighted mean of the defined per-metric scores (the "average" row).
  std::optional<double> macro_precision() const;
  std::optional<double> macro_recall() const;
  std::optional<double> macro_f1() const;
};

/// Compares extracted records with truth entries, matched on
/// (os_version, interaction_id, run_index). Throws MissingTruth when a
/// record has no matching entry.
ExtractionAccuracy evaluate_extraction(const std::vector<MetricsRecord>& records,
                                       const GroundTruth& truth);

/// Scores one detector's verdicts against the truth labels, matched on
/// (interaction_id, metric). Throws MissingLabel.
DetectionAccuracy evaluate_detection(const std::vector<RegressionVerdict>& verdicts,
                                     const GroundTruth& truth);

}  // namespace uxperf
