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

#include "uxperf/regression.hpp"

#include <string>

#include "uxperf/error.hpp"

namespace uxperf {

const char* to_string(SeverityBand b) noexcept {
  switch (b) {
    case SeverityBand::Excellent: return "Excellent";
    case SeverityBand::Good: return "Good";
    case SeverityBand::NoticeableLag: return "NoticeableLag";
    case SeverityBand::SevereLag: return "SevereLag";
  }
  return "Excellent";
}

SeverityBand severity_band_from_string(const std::string& s) {
  if (s == "Excellent") return SeverityBand::Excellent;
  if (s == "Good") return SeverityBand::Good;
  if (s == "NoticeableLag") return SeverityBand::NoticeableLag;
  if (s == "SevereLag") return SeverityBand::SevereLag;
  throw Error(Errc::InvalidConfig, "unknown severity band \"" + s + "\"");
}

void SeverityCuts::validate() const {
  if (!(0.0 < c1 && c1 < c2 && c2 < c3)) {
    throw Error(Errc::InvalidConfig, "severity cuts must satisfy 0 < c1 < c2 < c3");
  }
}

SeverityCuts default_severity_cuts(MetricKind metric) {
  switch (metric) {
    case MetricKind::ResponseTime: return {100.0, 300.0, 1000.0};
    case MetricKind::FinishTime: return {1000.0, 3000.0, 5000.0};
    case MetricKind::LaunchTime: return {1000.0, 3000.0, 5000.0};
    case MetricKind::DroppedFrames: return {3.0, 10.0, 30.0};
  }
  return {100.0, 300.0, 1000.0};
}

SeverityBand classify_severity(double value, const SeverityCuts& cuts) {
  cuts.validate();
  if (value < cuts.c1) return SeverityBand::Excellent;
  if (value < cuts.c2) return SeverityBand::Good;
  if (value < cuts.c3) return SeverityBand::NoticeableLag;
  return SeverityBand::SevereLag;
}

void MetricConfig::validate() const {
  if (theta < 0.0) throw Error(Errc::InvalidConfig, "theta must be >= 0");
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw Error(Errc::InvalidConfig, "alpha must be in (0, 1)");
  }
  if (!(delta_min >= 0.0 && delta_min < 1.0)) {
    throw Error(Errc::InvalidConfig, "delta_min must be in [0, 1)");
  }
}

double default_theta(MetricKind metric) {
  switch (metric) {
    case MetricKind::ResponseTime: return 100.0;
    case MetricKind::FinishTime: return 200.0;
    case MetricKind::LaunchTime: return 200.0;
    case MetricKind::DroppedFrames: return 3.0;
  }
  return 100.0;
}

namespace {

RegressionVerdict verdict_common(const MetricSamples& base, const MetricSamples& updated,
                                 MetricKind metric, const SeverityCuts& cuts, int min_runs) {
  if (base.metric != updated.metric || base.metric != metric) {
    throw Error(Errc::MetricMismatch,
                std::string("sample metrics disagree: base=") + to_string(base.metric) +
                    " updated=" + to_string(updated.metric) + " config=" + to_string(metric));
  }
  if (base.interaction_id != updated.interaction_id) {
    throw Error(Errc::MetricMismatch, "samples compare different interactions: " +
                                          base.interaction_id + " vs " +
                                          updated.interaction_id);
  }
  if (base.values.size() < static_cast<std::size_t>(min_runs) ||
      updated.values.size() < static_cast<std::size_t>(min_runs)) {
    throw Error(Errc::InsufficientRuns,
                base.interaction_id + "/" + to_string(metric) + ": " +
                    std::to_string(base.values.size()) + " base / " +
                    std::to_string(updated.values.size()) + " updated run(s), need " +
                    std::to_string(min_runs));
  }

  RegressionVerdict v;
  v.interaction_id = base.interaction_id;
  v.metric = metric;
  const RankSumResult rs =
      wilcoxon_rank_sum(base.values, updated.values, RankSumMode::Auto,
                        RankSumAlternative::BGreater);
  v.p_value = rs.p_value;
  v.cliffs_delta = cliffs_delta(base.values, updated.values);
  v.median_base = median(base.values);
  v.median_updated = median(updated.values);
  v.median_diff = v.median_updated - v.median_base;
  v.severity_base = classify_severity(v.median_base, cuts);
  v.severity_updated = classify_severity(v.median_updated, cuts);
  v.sample_sizes = {static_cast<int>(base.values.size()),
                    static_cast<int>(updated.values.size())};
  return v;
}

}  // namespace

RegressionVerdict detect_regression(const MetricSamples& base, const MetricSamples& updated,
                                    const MetricConfig& cfg, const SeverityCuts& cuts,
                                    int min_runs) {
  cfg.validate();
  RegressionVerdict v = verdict_common(base, updated, cfg.metric, cuts, min_runs);
  v.theta = cfg.theta;
  v.regressed = v.p_value < cfg.alpha && v.cliffs_delta >= cfg.delta_min &&
                v.median_diff > cfg.theta;
  return v;
}

RegressionVerdict baseline_detect(const MetricSamples& base, const MetricSamples& updated,
                                  double alpha, double delta_min, int min_runs) {
  RegressionVerdict v =
      verdict_common(base, updated, base.metric, default_severity_cuts(base.metric), min_runs);
  v.theta = 0.0;
  v.regressed = v.p_value < alpha && v.cliffs_delta >= delta_min;
  return v;
}

}  // namespace uxperf
