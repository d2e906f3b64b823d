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

#include "cvlint/app_config.hpp"

#include <fstream>

#include "cvlint/error.hpp"

namespace cvlint {

using nlohmann::json;

namespace {

void invalid(const std::string& what) { throw Error(ErrorCode::InvalidArgument, what); }

}  // namespace

void AppConfig::validate() const {
  if (port < 0 || port > 65535) invalid("listen.port out of range");
  if (threads < 1) invalid("listen.threads must be >= 1");
  if (log_level != "error" && log_level != "info" && log_level != "debug") {
    invalid("log_level must be error, info or debug");
  }
  build.validate();
  eval.validate();
}

AppConfig app_config_from_json(const json& j) {
  if (!j.is_object()) invalid("config must be an object");
  AppConfig c;
  try {
    if (j.contains("config_version") && j.at("config_version").get<int>() != kConfigVersion) {
      invalid("unsupported config_version");
    }
    if (j.contains("snapshot")) c.snapshot_path = j.at("snapshot").get<std::string>();
    if (j.contains("listen")) {
      const auto& l = j.at("listen");
      c.host = l.value("host", c.host);
      c.port = l.value("port", c.port);
      c.threads = l.value("threads", c.threads);
    }
    if (j.contains("static_dir")) c.static_dir = j.at("static_dir").get<std::string>();
    c.log_level = j.value("log_level", c.log_level);
    if (j.contains("build")) {
      const auto& b = j.at("build");
      if (b.contains("cohort_criterion")) {
        auto crit = parse_cohort_criterion(b.at("cohort_criterion").get<std::string>());
        if (!crit) invalid("unknown build.cohort_criterion");
        c.build.cohort_criterion = *crit;
      }
      c.build.min_cohort_size = b.value("min_cohort_size", c.build.min_cohort_size);
      if (b.contains("trigram_pad")) {
        const auto pad = b.at("trigram_pad").get<std::string>();
        if (pad.size() != 1) invalid("build.trigram_pad must be one character");
        c.build.trigram_pad = pad[0];
      }
    }
    if (j.contains("eval")) merge_json(j.at("eval"), c.eval);
    if (j.contains("match")) merge_json(j.at("match"), c.eval.match);
  } catch (const json::exception& e) {
    invalid(std::string("config: ") + e.what());
  }
  c.validate();
  return c;
}

AppConfig load_app_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoFailure, "cannot open config " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::MalformedDocument, "config " + path.string() + ": " + e.what());
  }
  return app_config_from_json(j);
}

json to_json(const AppConfig& c) {
  json j;
  j["config_version"] = kConfigVersion;
  j["snapshot"] = c.snapshot_path.string();
  j["listen"] = {{"host", c.host}, {"port", c.port}, {"threads", c.threads}};
  j["static_dir"] = c.static_dir.string();
  j["log_level"] = c.log_level;
  j["build"] = {{"cohort_criterion", to_string(c.build.cohort_criterion)},
                {"min_cohort_size", c.build.min_cohort_size},
                {"trigram_pad", std::string(1, c.build.trigram_pad)}};
  auto eval = to_json(c.eval);
  j["match"] = eval["match"];
  eval.erase("match");
  j["eval"] = std::move(eval);
  return j;
}

}  // namespace cvlint
