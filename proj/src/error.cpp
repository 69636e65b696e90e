// Copyright 2026 The Acroforge Authors.
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

#include "acroforge/error.hpp"

namespace acroforge {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDegenerateForm: return "DegenerateForm";
    case ErrorCode::kConfigMismatch: return "ConfigMismatch";
    case ErrorCode::kUnresolvedPair: return "UnresolvedPair";
    case ErrorCode::kLeakedLongForm: return "LeakedLongForm";
    case ErrorCode::kContextTooShort: return "ContextTooShort";
    case ErrorCode::kSinkFailure: return "SinkFailure";
    case ErrorCode::kVerificationFailed: return "VerificationFailed";
    case ErrorCode::kSplitInfeasible: return "SplitInfeasible";
    case ErrorCode::kNoCandidates: return "NoCandidates";
    case ErrorCode::kScorerUnavailable: return "ScorerUnavailable";
    case ErrorCode::kInputMismatch: return "InputMismatch";
    case ErrorCode::kChunkInfeasible: return "ChunkInfeasible";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kConfig: return "ConfigError";
    case ErrorCode::kIo: return "IoError";
  }
  return "Unknown";
}

}  // namespace acroforge
