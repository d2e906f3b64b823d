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

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "cvlint/app_config.hpp"
#include "cvlint/error.hpp"
#include "cvlint/evaluator.hpp"
#include "cvlint/snapshot.hpp"

// Response documents shared by the CLI's structured output and the HTTP API,
// so both emit the same bytes for the same request.
namespace cvlint::api {

nlohmann::json search_json(const CorpusSnapshot& s, std::string_view first,
                           std::string_view last, std::optional<std::string_view> institution);

nlohmann::json suggest_json(const CorpusSnapshot& s, FieldKind field, std::string_view query,
                            const MatchParams& params);

nlohmann::json health_json(const CorpusSnapshot& s);

nlohmann::json error_json(std::string_view code, std::string_view message);

/// Pretty-printed document with a trailing newline.
std::string render(const nlohmann::json& doc);

std::string render_suggest_text(const nlohmann::json& suggest);
std::string render_search_text(const nlohmann::json& search);

/// HTTP status for a library error raised while serving a request.
int http_status(ErrorCode code);

/// Read-only HTTP front end over one loaded snapshot.
class Server {
 public:
  Server(std::shared_ptr<const CorpusSnapshot> snapshot, AppConfig config);
  ~Server();

  Server(const Server&) = delete;
  Server& operator=(const Server&) = delete;

  /// Binds to config.host:config.port (port 0 picks a free one) and returns
  /// the bound port, or -1.
  int bind();
  /// Blocks until stop().
  bool listen();
  void stop();
  void wait_until_ready() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace cvlint::api
