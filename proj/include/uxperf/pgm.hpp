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

#include "uxperf/frame.hpp"

namespace uxperf {

/// Reads a binary (P5) 8-bit PGM file.
Image read_pgm(const std::filesystem::path& path);

/// Writes a binary (P5) 8-bit PGM file. Output bytes are a pure function of
/// the image contents.
void write_pgm(const std::filesystem::path& path, const Image& img);

}  // namespace uxperf
