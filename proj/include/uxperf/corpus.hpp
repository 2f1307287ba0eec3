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
#include <vector>

#include "uxperf/screencast.hpp"

namespace uxperf {

// Canonical on-disk layout of one screencast directory:
//   meta.json            interaction metadata
//   manifest.txt         one line per frame: "<index> <pts_ms>"
//   frame_<%06d>.pgm     binary 8-bit PGM, one per manifest entry

/// Loads a screencast directory, verifying the structural invariants.
/// Throws Error with MissingFile / DimensionMismatch / NonMonotonicPts /
/// MalformedMetadata.
Screencast load_screencast(const std::filesystem::path& dir);

/// Emits a screencast in the canonical layout. pts are written with six
/// decimal places so a reload reproduces them within 1e-6 ms.
void write_screencast(const Screencast& sc, const std::filesystem::path& dir);

/// Lists every run directory under corpus_root/<os_version>, sorted by path.
std::vector<std::filesystem::path> scan_corpus(const std::filesystem::path& corpus_root,
                                               const std::string& os_version);

/// Decoder executable used by decode_container: $UXPERF_DECODER if set,
/// otherwise "ffmpeg".
std::string decoder_executable();

/// Converts a container video into the canonical layout (frames + manifest)
/// by spawning the external decoder with per-frame image output and a
/// frame-timestamp log, then translating that log into manifest.txt.
/// Presentation timestamps are preserved from the container, in ms.
/// Does not write meta.json; metadata comes from the recording harness.
std::filesystem::path decode_container(const std::filesystem::path& video_path,
                                       const std::filesystem::path& out_dir,
                                       const std::string& decoder = decoder_executable());

}  // namespace uxperf
