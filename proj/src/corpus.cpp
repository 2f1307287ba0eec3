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

#include "uxperf/corpus.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "uxperf/error.hpp"
#include "uxperf/pgm.hpp"

namespace uxperf {

namespace {

using nlohmann::json;

constexpr const char* kMetaKeys[] = {
    "app_id",    "scenario_id",         "interaction_id", "action_type",
    "action_x",  "action_y",            "action_timestamp_ms",
    "os_version", "run_index",          "device_refresh_hz",
};

std::string frame_file_name(std::size_t index) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "frame_%06zu.pgm", index);
  return buf;
}

InteractionMeta parse_meta(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(Errc::MissingFile, "missing metadata file " + path.string());
  }
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw Error(Errc::MalformedMetadata, path.string() + ": " + e.what());
  }
  if (!j.is_object()) {
    throw Error(Errc::MalformedMetadata, path.string() + ": top level must be an object");
  }
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (std::find(std::begin(kMetaKeys), std::end(kMetaKeys), key) == std::end(kMetaKeys)) {
      throw Error(Errc::MalformedMetadata, path.string() + ": unknown key \"" + key + "\"");
    }
  }
  try {
    InteractionMeta m;
    m.app_id = j.at("app_id").get<std::string>();
    m.scenario_id = j.at("scenario_id").get<std::string>();
    m.interaction_id = j.at("interaction_id").get<std::string>();
    m.action_type = action_type_from_string(j.at("action_type").get<std::string>());
    if (j.contains("action_x")) m.action_x = j.at("action_x").get<int>();
    if (j.contains("action_y")) m.action_y = j.at("action_y").get<int>();
    m.action_timestamp_ms = j.at("action_timestamp_ms").get<double>();
    m.os_version = j.at("os_version").get<std::string>();
    m.run_index = j.at("run_index").get<int>();
    m.device_refresh_hz = j.at("device_refresh_hz").get<double>();

    const bool launch = m.action_type == ActionType::Launch;
    const bool any_coords = m.action_x.has_value() || m.action_y.has_value();
    const bool both_coords = m.action_x.has_value() && m.action_y.has_value();
    if (launch && any_coords) {
      throw Error(Errc::MalformedMetadata,
                  path.string() + ": launch interaction carries action coordinates");
    }
    if (!launch && !both_coords) {
      throw Error(Errc::MalformedMetadata,
                  path.string() + ": non-launch interaction lacks action coordinates");
    }
    return m;
  } catch (const json::exception& e) {
    throw Error(Errc::MalformedMetadata, path.string() + ": " + e.what());
  }
}

json meta_to_json(const InteractionMeta& m) {
  nlohmann::ordered_json j;
  j["app_id"] = m.app_id;
  j["scenario_id"] = m.scenario_id;
  j["interaction_id"] = m.interaction_id;
  j["action_type"] = to_string(m.action_type);
  if (m.action_x) j["action_x"] = *m.action_x;
  if (m.action_y) j["action_y"] = *m.action_y;
  j["action_timestamp_ms"] = m.action_timestamp_ms;
  j["os_version"] = m.os_version;
  j["run_index"] = m.run_index;
  j["device_refresh_hz"] = m.device_refresh_hz;
  return j;
}

}  // namespace

Screencast load_screencast(const std::filesystem::path& dir) {
  Screencast sc;
  sc.meta = parse_meta(dir / "meta.json");

  const auto manifest_path = dir / "manifest.txt";
  std::ifstream manifest(manifest_path);
  if (!manifest) {
    throw Error(Errc::MissingFile, "missing manifest " + manifest_path.string());
  }
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(manifest, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::size_t index = 0;
    double pts = 0.0;
    std::string trailing;
    if (!(ls >> index >> pts) || (ls >> trailing)) {
      throw Error(Errc::MalformedMetadata,
                  manifest_path.string() + ": bad manifest line " + std::to_string(line_no));
    }
    if (index != sc.frames.size()) {
      throw Error(Errc::MalformedMetadata,
                  manifest_path.string() + ": expected index " +
                      std::to_string(sc.frames.size()) + ", got " + std::to_string(index));
    }
    Frame f;
    f.index = index;
    f.pts_ms = pts;
    sc.frames.push_back(std::move(f));
    ++line_no;
  }
  if (sc.frames.empty()) {
    throw Error(Errc::MalformedMetadata, manifest_path.string() + ": no frames listed");
  }
  for (std::size_t i = 0; i + 1 < sc.frames.size(); ++i) {
    if (!(sc.frames[i].pts_ms < sc.frames[i + 1].pts_ms)) {
      throw Error(Errc::NonMonotonicPts,
                  dir.string() + ": pts not strictly increasing at frame " +
                      std::to_string(i + 1));
    }
  }

  for (Frame& f : sc.frames) {
    const auto frame_path = dir / frame_file_name(f.index);
    if (!std::filesystem::exists(frame_path)) {
      throw Error(Errc::MissingFile, "missing frame image " + frame_path.string());
    }
    f.pixels = read_pgm(frame_path);
    if (!f.pixels.same_size(sc.frames.front().pixels)) {
      throw Error(Errc::DimensionMismatch,
                  frame_path.string() + ": frame size differs from frame 0");
    }
  }
  return sc;
}

void write_screencast(const Screencast& sc, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    throw Error(Errc::IoFailure, "cannot create " + dir.string() + ": " + ec.message());
  }

  {
    std::ofstream meta(dir / "meta.json", std::ios::trunc);
    if (!meta) throw Error(Errc::IoFailure, "cannot write meta.json in " + dir.string());
    meta << meta_to_json(sc.meta).dump(2) << "\n";
  }
  {
    std::ofstream manifest(dir / "manifest.txt", std::ios::trunc);
    if (!manifest) throw Error(Errc::IoFailure, "cannot write manifest in " + dir.string());
    char buf[64];
    for (const Frame& f : sc.frames) {
      std::snprintf(buf, sizeof(buf), "%zu %.6f\n", f.index, f.pts_ms);
      manifest << buf;
    }
  }
  for (const Frame& f : sc.frames) {
    write_pgm(dir / frame_file_name(f.index), f.pixels);
  }
}

std::vector<std::filesystem::path> scan_corpus(const std::filesystem::path& corpus_root,
                                               const std::string& os_version) {
  const auto version_root = corpus_root / os_version;
  if (!std::filesystem::is_directory(version_root)) {
    throw Error(Errc::MissingFile, "no corpus directory " + version_root.string());
  }
  std::vector<std::filesystem::path> runs;
  // Layout: <os>/<app>/<scenario>/<interaction>/run_<k>
  for (auto it = std::filesystem::recursive_directory_iterator(version_root);
       it != std::filesystem::recursive_directory_iterator(); ++it) {
    if (it->is_directory() && it->path().filename().string().rfind("run_", 0) == 0) {
      runs.push_back(it->path());
      it.disable_recursion_pending();
    }
  }
  std::sort(runs.begin(), runs.end());
  return runs;
}

}  // namespace uxperf
