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
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

namespace cvlint {

inline constexpr int kProfileSchemaVersion = 1;

enum class SourceTag { PrimaryNetwork, PartnerPlatform };

enum class SectionKind { Education, Experience, Award, Skill, Certification, Summary, Other };

/// A recommendable field. Each one lives in exactly one section kind.
enum class FieldKind { DegreeName, FieldOfStudy, JobTitle, SchoolName, OrganizationName, AwardTitle };

inline constexpr SectionKind kAllSectionKinds[] = {
    SectionKind::Education, SectionKind::Experience,    SectionKind::Award, SectionKind::Skill,
    SectionKind::Certification, SectionKind::Summary, SectionKind::Other};

inline constexpr FieldKind kAllFieldKinds[] = {
    FieldKind::DegreeName, FieldKind::FieldOfStudy,     FieldKind::JobTitle,
    FieldKind::SchoolName, FieldKind::OrganizationName, FieldKind::AwardTitle};

std::string_view to_string(SourceTag tag);
std::string_view to_string(SectionKind kind);
std::string_view to_string(FieldKind kind);

// The parse_* helpers return nullopt on unknown names. SectionKind::Other is
// never produced from a name: unknown section names become Other payloads.
std::optional<SourceTag> parse_source_tag(std::string_view name);
std::optional<SectionKind> parse_section_kind(std::string_view name);
std::optional<FieldKind> parse_field_kind(std::string_view name);

SectionKind section_of(FieldKind field);
std::span<const FieldKind> fields_of(SectionKind section);

struct BasicInfo {
  std::string first_name;
  std::string last_name;
  std::optional<std::string> headline;
  std::optional<std::string> location;

  bool operator==(const BasicInfo&) const = default;
};

struct YearMonth {
  int year = 0;
  std::optional<int> month;

  bool operator==(const YearMonth&) const = default;
};

struct Education {
  std::string school_name;
  std::string degree_name;
  std::optional<std::string> field_of_study;
  std::optional<int> start_year;
  std::optional<int> end_year;

  bool operator==(const Education&) const = default;
};

struct Experience {
  std::string title;
  std::string organization_name;
  std::optional<YearMonth> start;
  std::optional<YearMonth> end;
  std::optional<std::string> description;

  bool operator==(const Experience&) const = default;
};

struct Award {
  std::string title;
  std::optional<std::string> issuer;
  std::optional<int> year;

  bool operator==(const Award&) const = default;
};

struct Skill {
  std::string name;

  bool operator==(const Skill&) const = default;
};

struct Certification {
  std::string name;
  std::optional<std::string> issuer;
  std::optional<int> year;

  bool operator==(const Certification&) const = default;
};

struct Summary {
  std::string text;

  bool operator==(const Summary&) const = default;
};

/// A section the model does not know. `raw` is the compact JSON text of the
/// instance and is written back verbatim.
struct OtherSection {
  std::string kind_name;
  std::string raw;

  bool operator==(const OtherSection&) const = default;
};

using SectionInstance =
    std::variant<Education, Experience, Award, Skill, Certification, Summary, OtherSection>;

struct Profile {
  std::string id;
  SourceTag source = SourceTag::PrimaryNetwork;
  BasicInfo basic;
  std::map<SectionKind, std::vector<SectionInstance>> sections;

  const std::vector<SectionInstance>& instances(SectionKind kind) const;

  bool operator==(const Profile&) const = default;
};

struct ParsedProfile {
  Profile profile;
  // Instances whose primary fields were all blank.
  std::size_t dropped_instances = 0;
};

bool is_blank(std::string_view s);

/// Parses one profile document. Throws Error(MalformedDocument) when the text
/// is not JSON and Error(SchemaViolation) when required fields are missing or
/// mistyped.
ParsedProfile parse_profile(std::string_view doc);
ParsedProfile profile_from_json(const nlohmann::json& doc);

/// Compact single-line document; parse_profile(serialize_profile(p)) == p.
std::string serialize_profile(const Profile& p);
nlohmann::json profile_to_json(const Profile& p);

bool section_present(const Profile& p, SectionKind kind);

/// Value of `field` in `instance`, or nullopt when the instance is of a
/// different kind or the field is absent.
std::optional<std::string_view> field_value(const SectionInstance& instance, FieldKind field);

}  // namespace cvlint
