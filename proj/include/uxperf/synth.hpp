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

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "uxperf/metrics.hpp"
#include "uxperf/screencast.hpp"

namespace uxperf {

/// Removes `count` consecutive vsync slots starting at the first slot at or
/// after after_ms, leaving a (count+1)-period presentation gap.
struct DropEvent {
  double after_ms = 0.0;
  int count = 0;
};

enum class TransitionStyle { Abrupt, Gradual };

/// Procedural scene description with exact ground truth. Frames before
/// response_at_ms show scene A; the transition runs until finish_at_ms
/// (animated for abrupt, linear cross-fade for gradual); scene B is static
/// afterwards. pts follow the vsync grid except where drop_schedule removes
/// frames.
struct SceneSpec {
  int width = 96;
  int height = 64;
  double refresh_hz = 60.0;
  ActionType action_type = ActionType::Tap;
  double response_at_ms = 100.0;
  double finish_at_ms = 400.0;
  TransitionStyle transition = TransitionStyle::Abrupt;
  std::vector<DropEvent> drop_schedule;
  double noise_amplitude = 2.0;  // per-pixel uniform noise bound, intensity levels
  double duration_ms = 800.0;
  std::uint64_t seed = 0;

  void validate() const;  // throws InvalidSpec
};

/// True metric values for one generated screencast.
struct TruthEntry {
  std::string screencast_id;
  std::string interaction_id;
  std::string os_version;
  int run_index = 0;
  std::optional<double> response_ms;
  std::optional<double> finish_ms;
  std::optional<double> launch_ms;
  long long dropped = 0;
};

/// True regression label for one (interaction, metric) pair.
struct RegressionLabel {
  std::string interaction_id;
  MetricKind metric = MetricKind::ResponseTime;
  bool regressed = false;
};

struct GroundTruth {
  std::string base_version = "base";
  std::string updated_version = "updated";
  std::vector<TruthEntry> entries;
  std::vector<RegressionLabel> labels;
};

/// Writes one screencast in the canonical corpus layout and returns its
/// truth entry. Output bytes are a pure function of (spec, meta).
TruthEntry generate_screencast(const SceneSpec& spec, const InteractionMeta& meta,
                               const std::filesystem::path& out_dir);

/// Median shifts injected into the updated version of one interaction.
struct MetricDeltas {
  double response_ms = 0.0;
  double finish_ms = 0.0;
  double launch_ms = 0.0;
  int dropped = 0;
};

struct InteractionSpec {
  std::string app_id;
  std::string scenario_id;
  std::string interaction_id;
  SceneSpec scene;
  MetricDeltas deltas;
};

/// Whole-corpus generation request: interactions, runs per version, shared
/// seed, per-run jitter bound, and the thetas used to derive labels.
struct CorpusSpec {
  std::string base_version = "base";
  std::string updated_version = "updated";
  int runs_per_version = 20;
  std::uint64_t seed = 1;
  double jitter_ms = 8.0;
  std::map<MetricKind, double> thetas;  // defaults filled from default_theta
  std::vector<InteractionSpec> interactions;
};

CorpusSpec load_corpus_spec(const std::filesystem::path& path);  // throws InvalidSpec

/// Emits runs_per_version screencasts per interaction under both version
/// labels; updated runs carry the injected deltas plus per-run jitter.
/// Labels are true exactly when the injected delta exceeds the configured
/// theta for that metric. Deterministic given (spec, seed).
GroundTruth generate_paired_corpus(const CorpusSpec& spec,
                                   const std::filesystem::path& out_root);

void write_ground_truth(const GroundTruth& truth, const std::filesystem::path& path);
GroundTruth read_ground_truth(const std::filesystem::path& path);

}  // namespace uxperf
