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

#include "uxperf/error.hpp"

namespace uxperf {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::MissingFile: return "MissingFile";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NonMonotonicPts: return "NonMonotonicPts";
    case Errc::MalformedMetadata: return "MalformedMetadata";
    case Errc::DecoderUnavailable: return "DecoderUnavailable";
    case Errc::DecodeFailed: return "DecodeFailed";
    case Errc::TooFewFrames: return "TooFewFrames";
    case Errc::FrameTooSmall: return "FrameTooSmall";
    case Errc::NoVisualResponse: return "NoVisualResponse";
    case Errc::EmptySample: return "EmptySample";
    case Errc::ExactInfeasible: return "ExactInfeasible";
    case Errc::MetricMismatch: return "MetricMismatch";
    case Errc::InsufficientRuns: return "InsufficientRuns";
    case Errc::MissingTruth: return "MissingTruth";
    case Errc::MissingLabel: return "MissingLabel";
    case Errc::InvalidSpec: return "InvalidSpec";
    case Errc::InvalidConfig: return "InvalidConfig";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::IoFailure: return "IoFailure";
  }
  return "UnknownError";
}

}  // namespace uxperf
