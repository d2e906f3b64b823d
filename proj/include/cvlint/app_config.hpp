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

#include <cstddef>
#include <filesystem>
#include <string>

#include <json.hpp>

#include "cvlint/evaluator.hpp"
#include "cvlint/snapshot.hpp"

namespace cvlint {

inline constexpr int kConfigVersion = 1;

/// Everything the CLI and server read from the config file. Every field has
/// a default; CLI flags are applied on top after loading.
///
/// File keys (all optional):
///   config_version   1
///   snapshot         path to the snapshot file
///   listen           {host, port, threads}
///   static_dir       directory served at "/" by `serve`, empty to disable
///   log_level        "error" | "info" | "debug"
///   build            {cohort_criterion, min_cohort_size, trigram_pad}
///   eval             {completeness_threshold, cohort_criterion, checked_sections}
///   match            {top_k, min_support, ambiguity_ratio, spelling_ratio, distance_budget,
///                     casing_stopwords}
struct AppConfig {
  std::filesystem::path snapshot_path;
  std::string host = "127.0.0.1";
  int port = 8080;
  std::size_t threads = 16;
  std::filesystem::path static_dir;
  std::string log_level = "info";
  BuildConfig build;
  EvalConfig eval;  // eval.match holds the match params

  void validate() const;
};

/// Throws Error(InvalidArgument) on bad values, Error(IoFailure) when the
/// file cannot be read and Error(MalformedDocument) when it is not JSON.
AppConfig load_app_config(const std::filesystem::path& path);
AppConfig app_config_from_json(const nlohmann::json& j);
nlohmann::json to_json(const AppConfig& c);

}  // namespace cvlint
