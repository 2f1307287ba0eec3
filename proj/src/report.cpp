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

#include "uxperf/report.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <tuple>

#include <json.hpp>

#include "report_html.hpp"
#include "uxperf/error.hpp"

namespace uxperf {

namespace {

using nlohmann::json;

int band_index(SeverityBand b) { return static_cast<int>(b); }

/// Downgrade size of one verdict: bands crossed from base to updated.
int verdict_downgrade(const RegressionVerdict& v) {
  return band_index(v.severity_updated) - band_index(v.severity_base);
}

double normalized_diff(const RegressionVerdict& v) {
  return v.theta > 0.0 ? v.median_diff / v.theta : v.median_diff;
}

/// The most degraded verdict: widest band downgrade first, then largest
/// threshold-normalized median shift, then metric order for determinism.
const RegressionVerdict* worst_verdict(const std::vector<RegressionVerdict>& verdicts) {
  const RegressionVerdict* worst = nullptr;
  for (const RegressionVerdict& v : verdicts) {
    if (worst == nullptr) {
      worst = &v;
      continue;
    }
    const auto key = std::make_tuple(-verdict_downgrade(v), -normalized_diff(v),
                                     static_cast<int>(v.metric));
    const auto worst_key = std::make_tuple(-verdict_downgrade(*worst),
                                           -normalized_diff(*worst),
                                           static_cast<int>(worst->metric));
    if (key < worst_key) worst = &v;
  }
  return worst;
}

}  // namespace

int band_downgrade(const InteractionComparison& c) {
  return band_index(c.worst_transition.second) - band_index(c.worst_transition.first);
}

ReleaseReport compare_versions(const std::vector<InteractionVerdicts>& interactions,
                               const std::string& base_version,
                               const std::string& updated_version, double tolerance) {
  if (!(tolerance >= 0.0 && tolerance <= 1.0)) {
    throw Error(Errc::InvalidConfig, "tolerance must be in [0, 1]");
  }
  if (interactions.empty()) {
    throw Error(Errc::EmptyInput, "no interactions to compare");
  }

  ReleaseReport report;
  report.base_version = base_version;
  report.updated_version = updated_version;
  report.tolerance = tolerance;

  std::size_t regressed = 0;
  for (const InteractionVerdicts& in : interactions) {
    InteractionComparison cmp;
    cmp.interaction_id = in.interaction_id;
    cmp.app_id = in.app_id;
    cmp.scenario_id = in.scenario_id;
    cmp.action_type = in.action_type;
    cmp.verdicts = in.verdicts;
    cmp.regressed = std::any_of(in.verdicts.begin(), in.verdicts.end(),
                                [](const RegressionVerdict& v) { return v.regressed; });
    if (const RegressionVerdict* worst = worst_verdict(in.verdicts)) {
      cmp.worst_transition = {worst->severity_base, worst->severity_updated};
    }
    if (cmp.regressed) ++regressed;
    report.comparisons.push_back(std::move(cmp));
  }
  std::sort(report.comparisons.begin(), report.comparisons.end(),
            [](const InteractionComparison& a, const InteractionComparison& b) {
              return a.interaction_id < b.interaction_id;
            });

  report.regression_rate =
      static_cast<double>(regressed) / static_cast<double>(report.comparisons.size());
  report.pass = report.regression_rate <= tolerance;
  report.interaction_rankings = rank_interactions(report);
  report.app_rankings = rank_apps(report);
  return report;
}

std::vector<std::string> rank_interactions(const ReleaseReport& report) {
  std::vector<const InteractionComparison*> order;
  order.reserve(report.comparisons.size());
  for (const InteractionComparison& c : report.comparisons) order.push_back(&c);

  auto sort_key = [](const InteractionComparison& c) {
    const RegressionVerdict* worst = worst_verdict(c.verdicts);
    const double nd = worst != nullptr ? normalized_diff(*worst) : 0.0;
    return std::make_tuple(-band_downgrade(c), -nd, c.interaction_id);
  };
  std::sort(order.begin(), order.end(),
            [&](const InteractionComparison* a, const InteractionComparison* b) {
              return sort_key(*a) < sort_key(*b);
            });

  std::vector<std::string> ids;
  ids.reserve(order.size());
  for (const InteractionComparison* c : order) ids.push_back(c->interaction_id);
  return ids;
}

std::vector<AppRanking> rank_apps(const ReleaseReport& report) {
  std::map<std::string, AppRanking> by_app;
  for (const InteractionComparison& c : report.comparisons) {
    if (!c.regressed) continue;
    AppRanking& r = by_app[c.app_id];
    r.app_id = c.app_id;
    r.regressed_interactions += 1;
    r.total_band_downgrade += std::max(0, band_downgrade(c));
  }
  std::vector<AppRanking> ranking;
  ranking.reserve(by_app.size());
  for (auto& [id, r] : by_app) ranking.push_back(r);
  std::sort(ranking.begin(), ranking.end(), [](const AppRanking& a, const AppRanking& b) {
    return std::make_tuple(-a.regressed_interactions, -a.total_band_downgrade, a.app_id) <
           std::make_tuple(-b.regressed_interactions, -b.total_band_downgrade, b.app_id);
  });
  return ranking;
}

namespace {

json key_frames_to_json(const KeyFrameSummary& k) {
  nlohmann::ordered_json j;
  j["response_index"] = k.response_index;
  j["finish_index"] = k.finish_index;
  j["response_ms"] = k.response_ms;
  j["finish_ms"] = k.finish_ms;
  return j;
}

KeyFrameSummary key_frames_from_json(const json& j) {
  KeyFrameSummary k;
  k.response_index = j.at("response_index").get<double>();
  k.finish_index = j.at("finish_index").get<double>();
  k.response_ms = j.at("response_ms").get<double>();
  k.finish_ms = j.at("finish_ms").get<double>();
  return k;
}

json verdict_to_json(const RegressionVerdict& v) {
  nlohmann::ordered_json j;
  j["metric"] = to_string(v.metric);
  j["p_value"] = v.p_value;
  j["cliffs_delta"] = v.cliffs_delta;
  j["median_base"] = v.median_base;
  j["median_updated"] = v.median_updated;
  j["median_diff"] = v.median_diff;
  j["theta"] = v.theta;
  j["regressed"] = v.regressed;
  j["severity_base"] = to_string(v.severity_base);
  j["severity_updated"] = to_string(v.severity_updated);
  j["sample_sizes"] = json::array({v.sample_sizes.first, v.sample_sizes.second});
  if (v.key_frames_base) j["key_frames_base"] = key_frames_to_json(*v.key_frames_base);
  if (v.key_frames_updated) {
    j["key_frames_updated"] = key_frames_to_json(*v.key_frames_updated);
  }
  return j;
}

RegressionVerdict verdict_from_json(const std::string& interaction_id, const json& j) {
  RegressionVerdict v;
  v.interaction_id = interaction_id;
  v.metric = metric_kind_from_string(j.at("metric").get<std::string>());
  v.p_value = j.at("p_value").get<double>();
  v.cliffs_delta = j.at("cliffs_delta").get<double>();
  v.median_base = j.at("median_base").get<double>();
  v.median_updated = j.at("median_updated").get<double>();
  v.median_diff = j.at("median_diff").get<double>();
  v.theta = j.at("theta").get<double>();
  v.regressed = j.at("regressed").get<bool>();
  v.severity_base = severity_band_from_string(j.at("severity_base").get<std::string>());
  v.severity_updated = severity_band_from_string(j.at("severity_updated").get<std::string>());
  v.sample_sizes = {j.at("sample_sizes").at(0).get<int>(),
                    j.at("sample_sizes").at(1).get<int>()};
  if (j.contains("key_frames_base")) {
    v.key_frames_base = key_frames_from_json(j.at("key_frames_base"));
  }
  if (j.contains("key_frames_updated")) {
    v.key_frames_updated = key_frames_from_json(j.at("key_frames_updated"));
  }
  return v;
}

json report_to_json(const ReleaseReport& r) {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["base_version"] = r.base_version;
  j["updated_version"] = r.updated_version;
  j["tolerance"] = r.tolerance;
  j["regression_rate"] = r.regression_rate;
  j["decision"] = r.pass ? "pass" : "fail";
  json comparisons = json::array();
  for (const InteractionComparison& c : r.comparisons) {
    nlohmann::ordered_json jc;
    jc["interaction_id"] = c.interaction_id;
    jc["app_id"] = c.app_id;
    jc["scenario_id"] = c.scenario_id;
    jc["action_type"] = to_string(c.action_type);
    jc["regressed"] = c.regressed;
    jc["worst_transition"] = json::array(
        {to_string(c.worst_transition.first), to_string(c.worst_transition.second)});
    json verdicts = json::array();
    for (const RegressionVerdict& v : c.verdicts) verdicts.push_back(verdict_to_json(v));
    jc["verdicts"] = verdicts;
    comparisons.push_back(jc);
  }
  j["comparisons"] = comparisons;
  json apps = json::array();
  for (const AppRanking& a : r.app_rankings) {
    nlohmann::ordered_json ja;
    ja["app_id"] = a.app_id;
    ja["regressed_interactions"] = a.regressed_interactions;
    ja["total_band_downgrade"] = a.total_band_downgrade;
    apps.push_back(ja);
  }
  j["app_rankings"] = apps;
  j["interaction_rankings"] = r.interaction_rankings;
  json excluded = json::array();
  for (const ExcludedInteraction& e : r.excluded) {
    nlohmann::ordered_json je;
    je["interaction_id"] = e.interaction_id;
    je["reason"] = e.reason;
    excluded.push_back(je);
  }
  j["excluded"] = excluded;
  return j;
}

}  // namespace

std::filesystem::path emit_report(const ReleaseReport& report, ReportFormat format,
                                  const std::filesystem::path& out_path) {
  if (format == ReportFormat::Html) {
    return emit_report_html(report, out_path);
  }
  std::ofstream out(out_path, std::ios::trunc);
  if (!out) {
    throw Error(Errc::IoFailure, "cannot write " + out_path.string());
  }
  out << report_to_json(report).dump(2) << "\n";
  if (!out) {
    throw Error(Errc::IoFailure, "short write to " + out_path.string());
  }
  return out_path;
}

ReleaseReport parse_report(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(Errc::MissingFile, "cannot open " + path.string());
  }
  json j;
  try {
    j = json::parse(in);
    if (j.at("schema_version").get<int>() != 1) {
      throw Error(Errc::MalformedMetadata,
                  path.string() + ": unsupported schema_version");
    }
    ReleaseReport r;
    r.base_version = j.at("base_version").get<std::string>();
    r.updated_version = j.at("updated_version").get<std::string>();
    r.tolerance = j.at("tolerance").get<double>();
    r.regression_rate = j.at("regression_rate").get<double>();
    r.pass = j.at("decision").get<std::string>() == "pass";
    for (const auto& jc : j.at("comparisons")) {
      InteractionComparison c;
      c.interaction_id = jc.at("interaction_id").get<std::string>();
      c.app_id = jc.at("app_id").get<std::string>();
      c.scenario_id = jc.at("scenario_id").get<std::string>();
      c.action_type = action_type_from_string(jc.at("action_type").get<std::string>());
      c.regressed = jc.at("regressed").get<bool>();
      c.worst_transition = {
          severity_band_from_string(jc.at("worst_transition").at(0).get<std::string>()),
          severity_band_from_string(jc.at("worst_transition").at(1).get<std::string>())};
      for (const auto& jv : jc.at("verdicts")) {
        c.verdicts.push_back(verdict_from_json(c.interaction_id, jv));
      }
      r.comparisons.push_back(std::move(c));
    }
    for (const auto& ja : j.at("app_rankings")) {
      AppRanking a;
      a.app_id = ja.at("app_id").get<std::string>();
      a.regressed_interactions = ja.at("regressed_interactions").get<int>();
      a.total_band_downgrade = ja.at("total_band_downgrade").get<int>();
      r.app_rankings.push_back(std::move(a));
    }
    for (const auto& ji : j.at("interaction_rankings")) {
      r.interaction_rankings.push_back(ji.get<std::string>());
    }
    for (const auto& je : j.at("excluded")) {
      r.excluded.push_back(
          {je.at("interaction_id").get<std::string>(), je.at("reason").get<std::string>()});
    }
    return r;
  } catch (const json::exception& e) {
    throw Error(Errc::MalformedMetadata, path.string() + ": " + e.what());
  }
}

}  // namespace uxperf
