// Copyright 2026 The cvlint Authors.
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

#include "cvlint/error.hpp"

namespace cvlint {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedDocument: return "MalformedDocument";
    case ErrorCode::SchemaViolation: return "SchemaViolation";
    case ErrorCode::EmptyCorpus: return "EmptyCorpus";
    case ErrorCode::EmptyQuery: return "EmptyQuery";
    case ErrorCode::IoFailure: return "IoFailure";
    case ErrorCode::VersionMismatch: return "VersionMismatch";
    case ErrorCode::DigestMismatch: return "DigestMismatch";
    case ErrorCode::InfeasibleSpec: return "InfeasibleSpec";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace cvlint
