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
#include <string>
#include <utility>
#include <vector>

#include "uxperf/regression.hpp"

namespace uxperf {

/// All metric verdicts for one interaction, plus the identity needed for
/// grouping and ranking. Input to compare_versions.
struct InteractionVerdicts {
  std::string interaction_id;
  std::string app_id;
  std::string scenario_id;
  ActionType action_type = ActionType::Tap;
  std::vector<RegressionVerdict> verdicts;
};

/// One interaction's comparison outcome. regressed is true when any metric
/// verdict regressed; worst_transition is the severity move of the most
/// degraded metric.
struct InteractionComparison {
  std::string interaction_id;
  std::string app_id;
  std::string scenario_id;
  ActionType action_type = ActionType::Tap;
  bool regressed = false;
  std::pair<SeverityBand, SeverityBand> worst_transition{SeverityBand::Excellent,
                                                         SeverityBand::Excellent};
  std::vector<RegressionVerdict> verdicts;
};

struct AppRanking {
  std::string app_id;
  int regressed_interactions = 0;
  int total_band_downgrade = 0;
};

struct ExcludedInteraction {
  std::string interaction_id;
  std::string reason;
};

/// Release-gate outcome for one OS-version pair.
struct ReleaseReport {
  std::string base_version;
  std::string updated_version;
  double tolerance = 0.0;
  double regression_rate = 0.0;
  bool pass = true;  // regression_rate <= tolerance
  std::vector<InteractionComparison> comparisons;
  std::vector<AppRanking> app_rankings;
  std::vector<std::string> interaction_rankings;  // interaction ids, worst first
  std::vector<ExcludedInteraction> excluded;
};

/// Bands crossed by the comparison's worst transition (negative when the
/// updated version improved).
int band_downgrade(const InteractionComparison& c);

/// Aggregates per-interaction verdicts into the release decision and
/// rankings. Throws EmptyInput when no interactions are given and
/// InvalidConfig for a tolerance outside [0, 1].
ReleaseReport compare_versions(const std::vector<InteractionVerdicts>& interactions,
                               const std::string& base_version,
                               const std::string& updated_version, double tolerance);

/// Interactions ordered by severity: bands crossed desc, then
/// median_diff/theta desc, then interaction_id.
std::vector<std::string> rank_interactions(const ReleaseReport& report);

/// Regressed apps ordered by impact: regressed-interaction count desc, then
/// total band downgrade desc, then app_id. Apps without regressions are not
/// listed.
std::vector<AppRanking> rank_apps(const ReleaseReport& report);

enum class ReportFormat { Structured, Html };

/// Writes the report; the structured form is versioned JSON
/// (schema_version 1) that parse_report round-trips exactly, the HTML form
/// is one self-contained page. Throws IoFailure.
std::filesystem::path emit_report(const ReleaseReport& report, ReportFormat format,
                                  const std::filesystem::path& out_path);

ReleaseReport parse_report(const std::filesystem::path& path);

}  // namespace uxperf
