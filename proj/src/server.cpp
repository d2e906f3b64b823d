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

#include <httplib.h>

#include <cstdio>

#include "cvlint/api.hpp"

namespace cvlint::api {

using nlohmann::json;

namespace {

constexpr const char* kJson = "application/json";

void send(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(render(body), kJson);
}

void send_error(httplib::Response& res, int status, std::string_view code,
                std::string_view message) {
  send(res, status, error_json(code, message));
}

std::optional<std::string> param(const httplib::Request& req, const char* name) {
  if (!req.has_param(name)) return std::nullopt;
  return req.get_param_value(name);
}

}  // namespace

struct Server::Impl {
  std::shared_ptr<const CorpusSnapshot> snapshot;
  AppConfig config;
  httplib::Server http;

  // Runs a handler, mapping library errors onto status codes.
  template <class F>
  httplib::Server::Handler guarded(F f) {
    return [f](const httplib::Request& req, httplib::Response& res) {
      try {
        f(req, res);
      } catch (const Error& e) {
        send_error(res, http_status(e.code()), to_string(e.code()), e.what());
      } catch (const std::exception& e) {
        send_error(res, 500, "Internal", e.what());
      }
    };
  }

  const std::string* stored(const httplib::Request& req, httplib::Response& res) const {
    const auto source = parse_source_tag(req.matches[1].str());
    const auto* doc = source ? snapshot->document(*source, req.matches[2].str()) : nullptr;
    if (!doc) send_error(res, 404, "NotFound", "no stored profile " + req.matches[1].str() + "/" +
                                                  req.matches[2].str());
    return doc;
  }

  void routes() {
    const auto& s = *snapshot;

    http.Get("/api/health", guarded([&s](const auto&, auto& res) { send(res, 200, health_json(s)); }));

    http.Get("/api/search", guarded([&s](const httplib::Request& req, httplib::Response& res) {
      auto first = param(req, "first");
      auto last = param(req, "last");
      if (!first || !last) {
        send_error(res, 400, "InvalidArgument", "first and last are required");
        return;
      }
      auto institution = param(req, "institution");
      std::optional<std::string_view> inst;
      if (institution && !institution->empty()) inst = *institution;
      send(res, 200, search_json(s, *first, *last, inst));
    }));

    http.Get(R"(/api/profiles/([^/]+)/([^/]+))",
             guarded([this](const httplib::Request& req, httplib::Response& res) {
               if (const auto* doc = stored(req, res)) send(res, 200, json::parse(*doc));
             }));

    http.Post("/api/evaluate", guarded([this](const httplib::Request& req, httplib::Response& res) {
      const auto parsed = parse_profile(req.body);
      send(res, 200, to_json(evaluate(*snapshot, parsed.profile, config.eval)));
    }));

    http.Get(R"(/api/evaluate/([^/]+)/([^/]+))",
             guarded([this](const httplib::Request& req, httplib::Response& res) {
               if (const auto* doc = stored(req, res)) {
                 const auto parsed = parse_profile(*doc);
                 send(res, 200, to_json(evaluate(*snapshot, parsed.profile, config.eval)));
               }
             }));

    http.Get("/api/suggest", guarded([this](const httplib::Request& req, httplib::Response& res) {
      auto kind = param(req, "kind");
      auto q = param(req, "q");
      if (!kind || !q) {
        send_error(res, 400, "InvalidArgument", "kind and q are required");
        return;
      }
      auto field = parse_field_kind(*kind);
      if (!field) {
        send_error(res, 400, "InvalidArgument", "unknown kind " + *kind);
        return;
      }
      send(res, 200, suggest_json(*snapshot, *field, *q, config.eval.match));
    }));

    http.Get("/api/config", guarded([this](const auto&, auto& res) { send(res, 200, to_json(config)); }));

    http.set_error_handler([](const httplib::Request&, httplib::Response& res) {
      if (res.body.empty()) {
        send_error(res, res.status, res.status == 404 ? "NotFound" : "HttpError",
                   httplib::status_message(res.status));
      }
    });

    if (config.log_level == "debug") {
      http.set_logger([](const httplib::Request& req, const httplib::Response& res) {
        std::fprintf(stderr, "%s %s -> %d\n", req.method.c_str(), req.path.c_str(), res.status);
      });
    }
    if (!config.static_dir.empty()) http.set_mount_point("/", config.static_dir.string());
  }
};

Server::Server(std::shared_ptr<const CorpusSnapshot> snapshot, AppConfig config)
    : impl_(std::make_unique<Impl>()) {
  impl_->snapshot = std::move(snapshot);
  impl_->config = std::move(config);
  const auto threads = impl_->config.threads;
  impl_->http.new_task_queue = [threads] { return new httplib::ThreadPool(threads); };
  // Responses go out as header and body writes; without this, Nagle plus
  // delayed ACKs stall keep-alive clients for tens of milliseconds.
  impl_->http.set_tcp_nodelay(true);
  impl_->routes();
}

Server::~Server() { stop(); }

int Server::bind() {
  auto& c = impl_->config;
  if (c.port == 0) return impl_->http.bind_to_any_port(c.host);
  return impl_->http.bind_to_port(c.host, c.port) ? c.port : -1;
}

bool Server::listen() { return impl_->http.listen_after_bind(); }

void Server::stop() {
  if (impl_) impl_->http.stop();
}

void Server::wait_until_ready() const { impl_->http.wait_until_ready(); }

}  // namespace cvlint::api
