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

#include "cvlint/api.hpp"

#include <sstream>

#include "cvlint/normalize.hpp"

namespace cvlint::api {

using nlohmann::json;

json search_json(const CorpusSnapshot& s, std::string_view first, std::string_view last,
                 std::optional<std::string_view> institution) {
  json j;
  j["query"] = {{"first", first}, {"last", last}};
  if (institution) {
    j["query"]["institution"] = *institution;
  } else {
    j["query"]["institution"] = nullptr;
  }
  json matches = json::array();
  for (const auto& m : search_profiles(s, first, last, institution)) {
    json item = {{"source", to_string(m.source)},
                 {"id", m.id},
                 {"display_name", m.display_name},
                 {"headline", m.headline}};
    if (m.last_institution) {
      item["last_institution"] = *m.last_institution;
    } else {
      item["last_institution"] = nullptr;
    }
    matches.push_back(std::move(item));
  }
  j["count"] = matches.size();
  j["matches"] = std::move(matches);
  return j;
}

json suggest_json(const CorpusSnapshot& s, FieldKind field, std::string_view query,
                  const MatchParams& params) {
  const auto recs = recommend(s, field, query, params);
  const auto flags = classify_issues(s, field, query, recs, params);
  const auto key = normalize(query);
  json j;
  j["field"] = to_string(field);
  j["query"] = query;
  j["query_key"] = key;
  j["query_support"] = support(s, field, query);
  j["query_key_support"] = s.field_index(field).key_support(key);
  json list = json::array();
  for (const auto& r : recs) list.push_back(to_json(r));
  j["recommendations"] = std::move(list);
  json f = json::array();
  for (auto i : flags.list()) f.push_back(to_string(i));
  j["flags"] = std::move(f);
  return j;
}

json health_json(const CorpusSnapshot& s) {
  return {{"status", "ok"},
          {"profile_count", s.profile_count()},
          {"snapshot_digest", s.digest_hex()}};
}

json error_json(std::string_view code, std::string_view message) {
  return {{"error", {{"code", code}, {"message", message}}}};
}

std::string render(const json& doc) { return doc.dump(2) + "\n"; }

std::string render_suggest_text(const json& j) {
  std::ostringstream out;
  const auto& recs = j.at("recommendations");
  out << j.at("field").get<std::string>() << " \"" << j.at("query").get<std::string>()
      << "\" (support " << j.at("query_support").get<std::uint64_t>() << ")\n";
  if (recs.empty()) {
    out << "no recommendations\n";
  } else {
    std::size_t n = 0;
    for (const auto& r : recs) {
      out << "  " << ++n << ". " << r.at("surface").get<std::string>() << "  ("
          << r.at("support").get<std::uint64_t>() << ", " << r.at("match_class").get<std::string>()
          << ")\n";
    }
  }
  if (!j.at("flags").empty()) {
    out << "flags:";
    for (const auto& f : j.at("flags")) out << " " << f.get<std::string>();
    out << "\n";
  }
  return out.str();
}

std::string render_search_text(const json& j) {
  std::ostringstream out;
  const auto count = j.at("count").get<std::size_t>();
  out << count << " match" << (count == 1 ? "" : "es") << "\n";
  for (const auto& m : j.at("matches")) {
    out << "  [" << m.at("source").get<std::string>() << "] " << m.at("id").get<std::string>()
        << "  " << m.at("display_name").get<std::string>();
    if (!m.at("last_institution").is_null()) {
      out << "  (" << m.at("last_institution").get<std::string>() << ")";
    }
    if (!m.at("headline").get<std::string>().empty()) {
      out << "\n      " << m.at("headline").get<std::string>();
    }
    out << "\n";
  }
  return out.str();
}

int http_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedDocument:
    case ErrorCode::EmptyQuery:
    case ErrorCode::InvalidArgument:
      return 400;
    case ErrorCode::SchemaViolation:
      return 422;
    default:
      return 500;
  }
}

}  // namespace cvlint::api
