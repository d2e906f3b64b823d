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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cvlint {

enum class ErrorCode {
  MalformedDocument,
  SchemaViolation,
  EmptyCorpus,
  EmptyQuery,
  IoFailure,
  VersionMismatch,
  DigestMismatch,
  InfeasibleSpec,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

// All library failures surface as this exception; `code()` is the
// machine-readable part that the CLI maps to exit codes and the HTTP layer
// maps to status codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cvlint
