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

#include <stdexcept>
#include <string>

namespace uxperf {

/// Machine-readable failure categories. Every thrown uxperf::Error carries
/// exactly one of these so callers can branch without parsing messages.
enum class Errc {
  MissingFile,
  DimensionMismatch,
  NonMonotonicPts,
  MalformedMetadata,
  DecoderUnavailable,
  DecodeFailed,
  TooFewFrames,
  FrameTooSmall,
  NoVisualResponse,
  EmptySample,
  ExactInfeasible,
  MetricMismatch,
  InsufficientRuns,
  MissingTruth,
  MissingLabel,
  InvalidSpec,
  InvalidConfig,
  EmptyInput,
  IoFailure,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace uxperf
