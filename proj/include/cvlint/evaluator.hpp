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

#include <array>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "cvlint/profile.hpp"
#include "cvlint/recommend.hpp"
#include "cvlint/snapshot.hpp"

namespace cvlint {

struct EvalConfig {
  double completeness_threshold = 0.20;
  // Unset means the snapshot's build criterion.
  std::optional<CohortCriterion> cohort_criterion;
  std::set<SectionKind> checked_sections = {SectionKind::Education, SectionKind::Experience,
                                            SectionKind::Award,     SectionKind::Skill,
                                            SectionKind::Certification, SectionKind::Summary};
  MatchParams match;

  void validate() const;

  bool operator==(const EvalConfig&) const = default;
};

/// Declared in report order within one location.
enum class SuggestionKind { SectionCompleteness, Specificity, Spelling, Casing, Ambiguity };

inline constexpr SuggestionKind kAllSuggestionKinds[] = {
    SuggestionKind::SectionCompleteness, SuggestionKind::Specificity, SuggestionKind::Spelling,
    SuggestionKind::Casing, SuggestionKind::Ambiguity};

std::string_view to_string(SuggestionKind k);

struct Location {
  SectionKind section = SectionKind::Other;
  std::optional<std::size_t> instance;  // unset for section-level findings
  std::optional<FieldKind> field;

  bool operator==(const Location&) const = default;
};

struct CompletenessRationale {
  CohortKey cohort;
  bool fell_back_to_global = false;
  double rate = 0.0;
  std::uint64_t cohort_size = 0;
  double threshold = 0.0;

  bool operator==(const CompletenessRationale&) const = default;
};

struct FieldRationale {
  IssueFlags flags;
  std::uint64_t query_support = 0;
  std::uint64_t query_key_support = 0;

  bool operator==(const FieldRationale&) const = default;
};

struct Suggestion {
  SuggestionKind kind = SuggestionKind::SectionCompleteness;
  Location location;
  std::string original;
  std::vector<Recommendation> recommendations;
  std::variant<CompletenessRationale, FieldRationale> rationale;

  bool operator==(const Suggestion&) const = default;
};

struct ProfileRef {
  SourceTag source = SourceTag::PrimaryNetwork;
  std::string id;

  bool operator==(const ProfileRef&) const = default;
};

struct EvaluationReport {
  std::optional<ProfileRef> profile;  // nullopt = ad-hoc
  std::array<std::size_t, std::size(kAllSuggestionKinds)> summary{};
  std::vector<Suggestion> suggestions;
  std::string snapshot_digest;
  EvalConfig config;

  std::size_t count(SuggestionKind k) const { return summary[static_cast<std::size_t>(k)]; }

  bool operator==(const EvaluationReport&) const = default;
};

SuggestionKind precedence_kind(const IssueFlags& flags);

std::vector<Suggestion> completeness_suggestions(const CorpusSnapshot& s, const Profile& p,
                                                 const EvalConfig& c);
std::vector<Suggestion> field_suggestions(const CorpusSnapshot& s, const Profile& p,
                                          const EvalConfig& c);
EvaluationReport evaluate(const CorpusSnapshot& s, const Profile& p, const EvalConfig& c);

nlohmann::json to_json(const EvalConfig& c);
/// Throws Error(InvalidArgument) for unknown names or out-of-range values.
/// Missing keys keep the values already in `into`.
void merge_json(const nlohmann::json& j, EvalConfig& into);
void merge_json(const nlohmann::json& j, MatchParams& into);
nlohmann::json to_json(const MatchParams& p);
nlohmann::json to_json(const Recommendation& r);

nlohmann::json to_json(const EvaluationReport& r);
std::string render_text(const EvaluationReport& r);

}  // namespace cvlint
