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

#include "uxperf/keyframes.hpp"
#include "uxperf/metrics.hpp"
#include "uxperf/regression.hpp"
#include "uxperf/ssim.hpp"

namespace uxperf {

/// Every tunable of the pipeline in one place. Loaded from a JSON file with
/// the same shape; unknown keys are rejected. CLI flags override file values.
struct ToolConfig {
  SsimParams ssim;
  KeyFrameParams keyframes;
  double gap_epsilon = kDefaultGapEpsilon;
  int runs_per_version = 20;
  int min_runs = kDefaultMinRuns;
  double alpha = 0.05;
  double delta_min = 0.147;
  std::map<MetricKind, double> theta;
  std::map<MetricKind, SeverityCuts> severity;
  double tolerance = 0.02;
  int jobs = 0;  // 0 = library default thread count

  MetricConfig metric_config(MetricKind m) const;
  const SeverityCuts& cuts(MetricKind m) const;

  void validate() const;  // throws InvalidConfig
};

/// Built-in defaults (theta and severity maps fully populated).
ToolConfig default_config();

ToolConfig load_config(const std::filesystem::path& path);  // throws InvalidConfig
void save_config(const ToolConfig& cfg, const std::filesystem::path& path);

}  // namespace uxperf
