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

#include "cvlint/profile.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cstdio>

#include "cvlint/error.hpp"

namespace cvlint {

using nlohmann::json;

namespace {

constexpr std::array<std::string_view, 2> kSourceNames = {"PrimaryNetwork", "PartnerPlatform"};
constexpr std::array<std::string_view, 7> kSectionNames = {
    "Education", "Experience", "Award", "Skill", "Certification", "Summary", "Other"};
constexpr std::array<std::string_view, 6> kFieldNames = {
    "DegreeName", "FieldOfStudy", "JobTitle", "SchoolName", "OrganizationName", "AwardTitle"};

constexpr FieldKind kEducationFields[] = {FieldKind::SchoolName, FieldKind::DegreeName,
                                          FieldKind::FieldOfStudy};
constexpr FieldKind kExperienceFields[] = {FieldKind::JobTitle, FieldKind::OrganizationName};
constexpr FieldKind kAwardFields[] = {FieldKind::AwardTitle};

[[noreturn]] void schema_error(const std::string& what) {
  throw Error(ErrorCode::SchemaViolation, what);
}

std::string require_string(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return {};
  if (!it->is_string()) schema_error(where + "." + key + " must be a string");
  return it->get<std::string>();
}

std::optional<std::string> optional_string(const json& obj, const char* key,
                                           const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) schema_error(where + "." + key + " must be a string");
  return it->get<std::string>();
}

std::optional<int> optional_year(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  if (!it->is_number_integer()) schema_error(where + "." + key + " must be an integer year");
  auto v = it->get<long long>();
  if (v < 0 || v > 9999) schema_error(where + "." + key + " out of range");
  return static_cast<int>(v);
}

std::optional<int> parse_int(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

// "YYYY" or "YYYY-MM".
std::optional<YearMonth> optional_year_month(const json& obj, const char* key,
                                             const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) schema_error(where + "." + key + " must be \"YYYY\" or \"YYYY-MM\"");
  const auto text = it->get<std::string>();
  YearMonth ym;
  std::optional<int> year;
  if (text.size() == 4) {
    year = parse_int(text);
  } else if (text.size() == 7 && text[4] == '-') {
    year = parse_int(std::string_view(text).substr(0, 4));
    auto month = parse_int(std::string_view(text).substr(5, 2));
    if (!month || *month < 1 || *month > 12) schema_error(where + "." + key + " bad month");
    ym.month = month;
  }
  if (!year || *year < 0) schema_error(where + "." + key + " must be \"YYYY\" or \"YYYY-MM\"");
  ym.year = *year;
  return ym;
}

std::string format_year_month(const YearMonth& ym) {
  char buf[16];
  if (ym.month) {
    std::snprintf(buf, sizeof buf, "%04d-%02d", ym.year, *ym.month);
  } else {
    std::snprintf(buf, sizeof buf, "%04d", ym.year);
  }
  return buf;
}

// Returns nullopt for an instance whose primary fields are all blank.
std::optional<SectionInstance> parse_instance(SectionKind kind, const json& j,
                                              const std::string& where) {
  if (!j.is_object()) schema_error(where + " must be an object");
  switch (kind) {
    case SectionKind::Education: {
      Education e;
      e.school_name = require_string(j, "school_name", where);
      e.degree_name = require_string(j, "degree_name", where);
      e.field_of_study = optional_string(j, "field_of_study", where);
      e.start_year = optional_year(j, "start_year", where);
      e.end_year = optional_year(j, "end_year", where);
      if (is_blank(e.school_name) && is_blank(e.degree_name)) return std::nullopt;
      return e;
    }
    case SectionKind::Experience: {
      Experience e;
      e.title = require_string(j, "title", where);
      e.organization_name = require_string(j, "organization_name", where);
      e.start = optional_year_month(j, "start", where);
      e.end = optional_year_month(j, "end", where);
      e.description = optional_string(j, "description", where);
      if (is_blank(e.title) && is_blank(e.organization_name)) return std::nullopt;
      return e;
    }
    case SectionKind::Award: {
      Award a;
      a.title = require_string(j, "title", where);
      a.issuer = optional_string(j, "issuer", where);
      a.year = optional_year(j, "year", where);
      if (is_blank(a.title)) return std::nullopt;
      return a;
    }
    case SectionKind::Skill: {
      Skill s{require_string(j, "name", where)};
      if (is_blank(s.name)) return std::nullopt;
      return s;
    }
    case SectionKind::Certification: {
      Certification c;
      c.name = require_string(j, "name", where);
      c.issuer = optional_string(j, "issuer", where);
      c.year = optional_year(j, "year", where);
      if (is_blank(c.name)) return std::nullopt;
      return c;
    }
    case SectionKind::Summary: {
      Summary s{require_string(j, "text", where)};
      if (is_blank(s.text)) return std::nullopt;
      return s;
    }
    case SectionKind::Other:
      break;
  }
  return std::nullopt;
}

template <class T>
void put_optional(json& out, const char* key, const std::optional<T>& v) {
  if (v) out[key] = *v;
}

json instance_to_json(const SectionInstance& instance) {
  json out = json::object();
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Education>) {
          out["school_name"] = v.school_name;
          out["degree_name"] = v.degree_name;
          put_optional(out, "field_of_study", v.field_of_study);
          put_optional(out, "start_year", v.start_year);
          put_optional(out, "end_year", v.end_year);
        } else if constexpr (std::is_same_v<T, Experience>) {
          out["title"] = v.title;
          out["organization_name"] = v.organization_name;
          if (v.start) out["start"] = format_year_month(*v.start);
          if (v.end) out["end"] = format_year_month(*v.end);
          put_optional(out, "description", v.description);
        } else if constexpr (std::is_same_v<T, Award>) {
          out["title"] = v.title;
          put_optional(out, "issuer", v.issuer);
          put_optional(out, "year", v.year);
        } else if constexpr (std::is_same_v<T, Skill>) {
          out["name"] = v.name;
        } else if constexpr (std::is_same_v<T, Certification>) {
          out["name"] = v.name;
          put_optional(out, "issuer", v.issuer);
          put_optional(out, "year", v.year);
        } else if constexpr (std::is_same_v<T, Summary>) {
          out["text"] = v.text;
        } else {
          out = json::parse(v.raw);
        }
      },
      instance);
  return out;
}

// Education ordered by end_year descending; undated instances keep their
// relative order after all dated ones.
void order_education(std::vector<SectionInstance>& list) {
  auto rank = [](const SectionInstance& i) -> long {
    const auto& e = std::get<Education>(i);
    return e.end_year ? -static_cast<long>(*e.end_year) : 1L;
  };
  std::stable_sort(list.begin(), list.end(),
                   [&](const auto& a, const auto& b) { return rank(a) < rank(b); });
}

}  // namespace

std::string_view to_string(SourceTag tag) { return kSourceNames[static_cast<std::size_t>(tag)]; }
std::string_view to_string(SectionKind kind) {
  return kSectionNames[static_cast<std::size_t>(kind)];
}
std::string_view to_string(FieldKind kind) { return kFieldNames[static_cast<std::size_t>(kind)]; }

std::optional<SourceTag> parse_source_tag(std::string_view name) {
  for (std::size_t i = 0; i < kSourceNames.size(); ++i) {
    if (kSourceNames[i] == name) return static_cast<SourceTag>(i);
  }
  return std::nullopt;
}

std::optional<SectionKind> parse_section_kind(std::string_view name) {
  for (std::size_t i = 0; i + 1 < kSectionNames.size(); ++i) {
    if (kSectionNames[i] == name) return static_cast<SectionKind>(i);
  }
  return std::nullopt;
}

std::optional<FieldKind> parse_field_kind(std::string_view name) {
  for (std::size_t i = 0; i < kFieldNames.size(); ++i) {
    if (kFieldNames[i] == name) return static_cast<FieldKind>(i);
  }
  return std::nullopt;
}

SectionKind section_of(FieldKind field) {
  switch (field) {
    case FieldKind::DegreeName:
    case FieldKind::FieldOfStudy:
    case FieldKind::SchoolName:
      return SectionKind::Education;
    case FieldKind::JobTitle:
    case FieldKind::OrganizationName:
      return SectionKind::Experience;
    case FieldKind::AwardTitle:
      return SectionKind::Award;
  }
  return SectionKind::Other;
}

std::span<const FieldKind> fields_of(SectionKind section) {
  switch (section) {
    case SectionKind::Education: return kEducationFields;
    case SectionKind::Experience: return kExperienceFields;
    case SectionKind::Award: return kAwardFields;
    default: return {};
  }
}

const std::vector<SectionInstance>& Profile::instances(SectionKind kind) const {
  static const std::vector<SectionInstance> kEmpty;
  auto it = sections.find(kind);
  return it == sections.end() ? kEmpty : it->second;
}

bool is_blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isspace(c) != 0; });
}

ParsedProfile parse_profile(std::string_view doc) {
  json j;
  try {
    j = json::parse(doc.begin(), doc.end());
  } catch (const json::exception& e) {
    throw Error(ErrorCode::MalformedDocument, e.what());
  }
  return profile_from_json(j);
}

ParsedProfile profile_from_json(const json& j) {
  if (!j.is_object()) schema_error("profile document must be an object");
  ParsedProfile out;
  Profile& p = out.profile;

  if (auto it = j.find("schema_version"); it != j.end()) {
    if (!it->is_number_integer() || it->get<long long>() != kProfileSchemaVersion) {
      schema_error("unsupported schema_version");
    }
  }

  auto id = j.find("id");
  if (id == j.end() || !id->is_string() || id->get<std::string>().empty()) {
    schema_error("id must be a non-empty string");
  }
  p.id = id->get<std::string>();

  auto source = j.find("source");
  if (source == j.end() || !source->is_string()) schema_error("source must be a string");
  auto tag = parse_source_tag(source->get<std::string>());
  if (!tag) schema_error("unknown source '" + source->get<std::string>() + "'");
  p.source = *tag;

  auto basic = j.find("basic");
  if (basic == j.end() || !basic->is_object()) schema_error("basic must be an object");
  p.basic.first_name = require_string(*basic, "first_name", "basic");
  p.basic.last_name = require_string(*basic, "last_name", "basic");
  if (is_blank(p.basic.first_name) || is_blank(p.basic.last_name)) {
    schema_error("basic.first_name and basic.last_name are required");
  }
  p.basic.headline = optional_string(*basic, "headline", "basic");
  p.basic.location = optional_string(*basic, "location", "basic");

  auto sections = j.find("sections");
  if (sections == j.end() || sections->is_null()) return out;
  if (!sections->is_object()) schema_error("sections must be an object");

  for (const auto& [name, list] : sections->items()) {
    if (!list.is_array()) schema_error("sections." + name + " must be an array");
    auto kind = parse_section_kind(name);
    auto& target = p.sections[kind.value_or(SectionKind::Other)];
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (!kind) {
        target.emplace_back(OtherSection{name, list[i].dump()});
        continue;
      }
      const auto where = "sections." + name + "[" + std::to_string(i) + "]";
      if (auto inst = parse_instance(*kind, list[i], where)) {
        target.push_back(std::move(*inst));
      } else {
        ++out.dropped_instances;
      }
    }
  }
  std::erase_if(p.sections, [](const auto& kv) { return kv.second.empty(); });
  if (auto it = p.sections.find(SectionKind::Education); it != p.sections.end()) {
    order_education(it->second);
  }
  return out;
}

json profile_to_json(const Profile& p) {
  json out;
  out["schema_version"] = kProfileSchemaVersion;
  out["id"] = p.id;
  out["source"] = to_string(p.source);
  json basic;
  basic["first_name"] = p.basic.first_name;
  basic["last_name"] = p.basic.last_name;
  put_optional(basic, "headline", p.basic.headline);
  put_optional(basic, "location", p.basic.location);
  out["basic"] = std::move(basic);

  json sections = json::object();
  for (const auto& [kind, list] : p.sections) {
    for (const auto& inst : list) {
      std::string name(to_string(kind));
      if (const auto* other = std::get_if<OtherSection>(&inst)) name = other->kind_name;
      sections[name].push_back(instance_to_json(inst));
    }
  }
  out["sections"] = std::move(sections);
  return out;
}

std::string serialize_profile(const Profile& p) { return profile_to_json(p).dump(); }

bool section_present(const Profile& p, SectionKind kind) { return !p.instances(kind).empty(); }

std::optional<std::string_view> field_value(const SectionInstance& instance, FieldKind field) {
  switch (field) {
    case FieldKind::DegreeName:
      if (auto* e = std::get_if<Education>(&instance)) return e->degree_name;
      break;
    case FieldKind::SchoolName:
      if (auto* e = std::get_if<Education>(&instance)) return e->school_name;
      break;
    case FieldKind::FieldOfStudy:
      if (auto* e = std::get_if<Education>(&instance); e && e->field_of_study) {
        return *e->field_of_study;
      }
      break;
    case FieldKind::JobTitle:
      if (auto* e = std::get_if<Experience>(&instance)) return e->title;
      break;
    case FieldKind::OrganizationName:
      if (auto* e = std::get_if<Experience>(&instance)) return e->organization_name;
      break;
    case FieldKind::AwardTitle:
      if (auto* a = std::get_if<Award>(&instance)) return a->title;
      break;
  }
  return std::nullopt;
}

}  // namespace cvlint
