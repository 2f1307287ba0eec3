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

#include "uxperf/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <tuple>

#include <json.hpp>

#include "uxperf/error.hpp"

namespace uxperf {

namespace {

using nlohmann::json;

// Guards the floor against representation error when a gap is an exact
// multiple of the vsync period (grid-aligned pts).
constexpr double kFloorGuard = 1e-9;

const char* flag_name(MetricFlag f) {
  switch (f) {
    case MetricFlag::NoVisualResponse: return "NO_VISUAL_RESPONSE";
    case MetricFlag::UnstableTail: return "UNSTABLE_TAIL";
  }
  return "";
}

MetricFlag flag_from_string(const std::string& s) {
  if (s == "NO_VISUAL_RESPONSE") return MetricFlag::NoVisualResponse;
  if (s == "UNSTABLE_TAIL") return MetricFlag::UnstableTail;
  throw Error(Errc::MalformedMetadata, "unknown metric flag \"" + s + "\"");
}

}  // namespace

const char* to_string(MetricKind m) noexcept {
  switch (m) {
    case MetricKind::ResponseTime: return "response_time";
    case MetricKind::FinishTime: return "finish_time";
    case MetricKind::LaunchTime: return "launch_time";
    case MetricKind::DroppedFrames: return "dropped_frames";
  }
  return "response_time";
}

MetricKind metric_kind_from_string(const std::string& s) {
  if (s == "response_time") return MetricKind::ResponseTime;
  if (s == "finish_time") return MetricKind::FinishTime;
  if (s == "launch_time") return MetricKind::LaunchTime;
  if (s == "dropped_frames") return MetricKind::DroppedFrames;
  throw Error(Errc::InvalidConfig, "unknown metric \"" + s + "\"");
}

std::vector<MetricKind> applicable_metrics(ActionType action) {
  if (action == ActionType::Launch) {
    return {MetricKind::LaunchTime, MetricKind::DroppedFrames};
  }
  return {MetricKind::ResponseTime, MetricKind::FinishTime, MetricKind::DroppedFrames};
}

long long count_dropped_frames(const std::vector<double>& pts_ms, double refresh_hz,
                               double gap_epsilon) {
  if (!(refresh_hz > 0.0)) {
    throw Error(Errc::InvalidConfig, "refresh_hz must be positive");
  }
  if (gap_epsilon < 0.0) {
    throw Error(Errc::InvalidConfig, "gap_epsilon must be >= 0");
  }
  const double vsync_tol = (1000.0 / refresh_hz) * (1.0 + gap_epsilon);
  long long total = 0;
  for (std::size_t i = 0; i + 1 < pts_ms.size(); ++i) {
    const double dt = pts_ms[i + 1] - pts_ms[i];
    if (!(dt > 0.0)) {
      throw Error(Errc::NonMonotonicPts,
                  "pts not strictly increasing at index " + std::to_string(i + 1));
    }
    const long long missed =
        static_cast<long long>(std::floor(dt / vsync_tol + kFloorGuard)) - 1;
    if (missed > 0) total += missed;
  }
  return total;
}

InteractionMetrics extract_metrics(const Screencast& sc, const SsimParams& sp,
                                   const KeyFrameParams& kp, double gap_epsilon) {
  if (sc.frames.size() < 2) {
    throw Error(Errc::TooFewFrames, sc.id() + ": need at least 2 frames for metrics");
  }
  InteractionMetrics out;
  out.screencast_id = sc.id();

  std::vector<double> pts;
  pts.reserve(sc.frames.size());
  for (const Frame& f : sc.frames) pts.push_back(f.pts_ms);
  out.dropped_frames = count_dropped_frames(pts, sc.meta.device_refresh_hz, gap_epsilon);

  const SsimSeries series = ssim_series(sc, sp);
  const double t0 = pts.front();
  try {
    if (sc.meta.action_type == ActionType::Launch) {
      // Launch time is the finish time of the startup interaction; splash
      // screens and loading animations fall inside the window by definition.
      const FinishFrame fin = detect_finish_frame(series, kp);
      out.launch_time_ms = pts[fin.index] - t0;
      out.finish_index = fin.index;
      if (fin.unstable_tail) out.flags.insert(MetricFlag::UnstableTail);
    } else {
      const std::size_t response = detect_response_frame(series, kp);
      const FinishFrame fin = detect_finish_frame(series, kp);
      out.response_time_ms = pts[response] - t0;
      out.finish_time_ms = pts[fin.index] - t0;
      out.response_index = response;
      out.finish_index = fin.index;
      if (fin.unstable_tail) out.flags.insert(MetricFlag::UnstableTail);
    }
  } catch (const Error& e) {
    if (e.code() != Errc::NoVisualResponse) throw;
    out.flags.insert(MetricFlag::NoVisualResponse);
  }
  return out;
}

MetricsRecord make_record(const Screencast& sc, const InteractionMetrics& m) {
  MetricsRecord r;
  r.interaction_id = sc.meta.interaction_id;
  r.app_id = sc.meta.app_id;
  r.scenario_id = sc.meta.scenario_id;
  r.action_type = sc.meta.action_type;
  r.os_version = sc.meta.os_version;
  r.run_index = sc.meta.run_index;
  r.metrics = m;
  return r;
}

namespace {

json record_to_json(const MetricsRecord& r) {
  nlohmann::ordered_json j;
  j["interaction_id"] = r.interaction_id;
  j["app_id"] = r.app_id;
  j["scenario_id"] = r.scenario_id;
  j["action_type"] = to_string(r.action_type);
  j["os_version"] = r.os_version;
  j["run_index"] = r.run_index;
  const InteractionMetrics& m = r.metrics;
  j["screencast_id"] = m.screencast_id;
  j["response_time_ms"] = m.response_time_ms ? json(*m.response_time_ms) : json(nullptr);
  j["finish_time_ms"] = m.finish_time_ms ? json(*m.finish_time_ms) : json(nullptr);
  j["launch_time_ms"] = m.launch_time_ms ? json(*m.launch_time_ms) : json(nullptr);
  j["dropped_frames"] = m.dropped_frames;
  json flags = json::array();
  for (MetricFlag f : m.flags) flags.push_back(flag_name(f));
  j["flags"] = flags;
  j["response_index"] = m.response_index ? json(*m.response_index) : json(nullptr);
  j["finish_index"] = m.finish_index ? json(*m.finish_index) : json(nullptr);
  return j;
}

MetricsRecord record_from_json(const json& j) {
  MetricsRecord r;
  try {
    r.interaction_id = j.at("interaction_id").get<std::string>();
    r.app_id = j.at("app_id").get<std::string>();
    r.scenario_id = j.at("scenario_id").get<std::string>();
    r.action_type = action_type_from_string(j.at("action_type").get<std::string>());
    r.os_version = j.at("os_version").get<std::string>();
    r.run_index = j.at("run_index").get<int>();
    r.metrics.screencast_id = j.at("screencast_id").get<std::string>();
    auto opt_double = [&](const char* key) -> std::optional<double> {
      if (j.at(key).is_null()) return std::nullopt;
      return j.at(key).get<double>();
    };
    r.metrics.response_time_ms = opt_double("response_time_ms");
    r.metrics.finish_time_ms = opt_double("finish_time_ms");
    r.metrics.launch_time_ms = opt_double("launch_time_ms");
    r.metrics.dropped_frames = j.at("dropped_frames").get<long long>();
    for (const auto& f : j.at("flags")) {
      r.metrics.flags.insert(flag_from_string(f.get<std::string>()));
    }
    if (!j.at("response_index").is_null()) {
      r.metrics.response_index = j.at("response_index").get<std::size_t>();
    }
    if (!j.at("finish_index").is_null()) {
      r.metrics.finish_index = j.at("finish_index").get<std::size_t>();
    }
  } catch (const json::exception& e) {
    throw Error(Errc::MalformedMetadata, std::string("bad metrics record: ") + e.what());
  }
  return r;
}

}  // namespace

void write_records(const std::vector<MetricsRecord>& records,
                   const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) {
    throw Error(Errc::IoFailure, "cannot write " + path.string());
  }
  for (const MetricsRecord& r : records) {
    out << record_to_json(r).dump() << "\n";
  }
}

std::vector<MetricsRecord> read_records(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(Errc::MissingFile, "cannot open " + path.string());
  }
  std::vector<MetricsRecord> records;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      records.push_back(record_from_json(json::parse(line)));
    } catch (const json::exception& e) {
      throw Error(Errc::MalformedMetadata, path.string() + ": " + e.what());
    }
  }
  return records;
}

namespace {

std::optional<double> metric_value(const MetricsRecord& r, MetricKind kind) {
  switch (kind) {
    case MetricKind::ResponseTime: return r.metrics.response_time_ms;
    case MetricKind::FinishTime: return r.metrics.finish_time_ms;
    case MetricKind::LaunchTime: return r.metrics.launch_time_ms;
    case MetricKind::DroppedFrames:
      return static_cast<double>(r.metrics.dropped_frames);
  }
  return std::nullopt;
}

SampleCollection collect_impl(const std::vector<MetricsRecord>& records, int min_runs,
                              std::vector<SkippedGroup>* skipped) {
  std::vector<MetricsRecord> sorted = records;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const MetricsRecord& a, const MetricsRecord& b) {
                     return std::tie(a.interaction_id, a.os_version, a.run_index) <
                            std::tie(b.interaction_id, b.os_version, b.run_index);
                   });

  SampleCollection out;
  std::map<std::pair<std::string, std::string>, std::vector<const MetricsRecord*>> groups;
  for (const MetricsRecord& r : sorted) {
    groups[{r.interaction_id, r.os_version}].push_back(&r);
  }

  for (const auto& [key, group] : groups) {
    const ActionType action = group.front()->action_type;
    // Each excluded run is tallied once, however many time metrics it feeds.
    for (const MetricsRecord* r : group) {
      if (r->metrics.flags.count(MetricFlag::NoVisualResponse) > 0) {
        ++out.excluded_no_visual_response;
      }
    }
    for (MetricKind kind : applicable_metrics(action)) {
      MetricSamples samples;
      samples.interaction_id = key.first;
      samples.os_version = key.second;
      samples.metric = kind;
      const bool time_metric = kind != MetricKind::DroppedFrames;
      for (const MetricsRecord* r : group) {
        if (time_metric && r->metrics.flags.count(MetricFlag::NoVisualResponse) > 0) {
          continue;
        }
        if (auto v = metric_value(*r, kind)) {
          samples.values.push_back(*v);
        }
      }
      if (samples.values.size() < static_cast<std::size_t>(min_runs)) {
        const std::string reason = "only " + std::to_string(samples.values.size()) +
                                   " usable run(s), need " + std::to_string(min_runs);
        if (skipped == nullptr) {
          throw Error(Errc::InsufficientRuns, key.first + "/" + key.second + " " +
                                                  to_string(kind) + ": " + reason);
        }
        skipped->push_back({key.first, kind, key.second, reason});
        continue;
      }
      out.samples.push_back(std::move(samples));
    }
  }
  return out;
}

}  // namespace

SampleCollection collect_samples(const std::vector<MetricsRecord>& records, int min_runs) {
  return collect_impl(records, min_runs, nullptr);
}

SampleCollection collect_samples_lenient(const std::vector<MetricsRecord>& records,
                                         int min_runs, std::vector<SkippedGroup>* skipped) {
  std::vector<SkippedGroup> local;
  return collect_impl(records, min_runs, skipped != nullptr ? skipped : &local);
}

}  // namespace uxperf
