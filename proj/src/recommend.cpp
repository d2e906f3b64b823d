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

#include "cvlint/recommend.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "cvlint/distance.hpp"
#include "cvlint/error.hpp"
#include "cvlint/normalize.hpp"

namespace cvlint {

namespace {

bool is_entity_field(FieldKind f) {
  return f == FieldKind::SchoolName || f == FieldKind::OrganizationName;
}

bool casing_checked(FieldKind f) {
  return f == FieldKind::SchoolName || f == FieldKind::OrganizationName ||
         f == FieldKind::JobTitle || f == FieldKind::DegreeName;
}

bool recommendation_less(const Recommendation& a, const Recommendation& b) {
  if (a.match_class != b.match_class) return a.match_class < b.match_class;
  if (a.support != b.support) return a.support > b.support;
  return a.surface < b.surface;
}

// A whitespace-separated raw token whose first byte is a lowercase letter
// and which is not a stopword.
bool has_lowercase_initial(std::string_view query, const std::vector<std::string>& stopwords) {
  std::size_t i = 0;
  while (i < query.size()) {
    while (i < query.size() && std::isspace(static_cast<unsigned char>(query[i]))) ++i;
    const std::size_t start = i;
    while (i < query.size() && !std::isspace(static_cast<unsigned char>(query[i]))) ++i;
    if (start == i) continue;
    const auto raw = query.substr(start, i - start);
    if (!std::islower(static_cast<unsigned char>(raw.front()))) continue;
    const auto key = normalize(raw);
    if (std::find(stopwords.begin(), stopwords.end(), key) == stopwords.end()) return true;
  }
  return false;
}

}  // namespace

std::string_view to_string(MatchClass c) {
  switch (c) {
    case MatchClass::ExactKey: return "ExactKey";
    case MatchClass::Expansion: return "Expansion";
    case MatchClass::Fuzzy: return "Fuzzy";
  }
  return "ExactKey";
}

std::string_view to_string(Issue issue) {
  switch (issue) {
    case Issue::Specificity: return "Specificity";
    case Issue::Spelling: return "Spelling";
    case Issue::Casing: return "Casing";
    case Issue::Ambiguity: return "Ambiguity";
  }
  return "Specificity";
}

std::vector<Issue> IssueFlags::list() const {
  std::vector<Issue> out;
  for (auto i : {Issue::Specificity, Issue::Spelling, Issue::Casing, Issue::Ambiguity}) {
    if (has(i)) out.push_back(i);
  }
  return out;
}

void MatchParams::validate() const {
  if (top_k < 1) throw Error(ErrorCode::InvalidArgument, "top_k must be >= 1");
  if (min_support < 1) throw Error(ErrorCode::InvalidArgument, "min_support must be >= 1");
  if (!(ambiguity_ratio > 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "ambiguity_ratio must be > 1");
  }
  if (!(spelling_ratio > 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "spelling_ratio must be > 1");
  }
  if (budget.short_max_len > budget.medium_max_len) {
    throw Error(ErrorCode::InvalidArgument, "distance budget lengths out of order");
  }
}

std::optional<MatchClass> classify_candidate(std::string_view query_key,
                                             std::string_view candidate_key,
                                             const MatchParams& params) {
  if (query_key == candidate_key) return MatchClass::ExactKey;
  const auto budget = params.budget(query_key.size());
  if (dl_distance_bounded(query_key, candidate_key, budget) <= budget) return MatchClass::Fuzzy;
  if (expansion_match(query_key, candidate_key)) return MatchClass::Expansion;
  return std::nullopt;
}

std::vector<Recommendation> recommend(const CorpusSnapshot& s, FieldKind field,
                                      std::string_view query, const MatchParams& params) {
  const auto qkey = normalize(query);
  if (qkey.empty()) throw Error(ErrorCode::EmptyQuery, "query is blank");
  const auto& index = s.field_index(field);
  const auto budget = params.budget(qkey.size());

  std::vector<Recommendation> out;
  auto take_key = [&](std::string_view key, MatchClass cls, std::size_t distance) {
    for (const auto& v : index.variants(key)) {
      if (v.support < params.min_support || v.surface == query) continue;
      out.push_back({v.surface, v.support, cls, cls == MatchClass::Fuzzy ? distance : 0});
    }
  };

  take_key(qkey, MatchClass::ExactKey, 0);

  std::set<std::string, std::less<>> fuzzy;
  for (auto& key : index.fuzzy_candidates(qkey, budget)) {
    if (key == qkey) continue;
    take_key(key, MatchClass::Fuzzy, dl_distance(qkey, key));
    fuzzy.insert(std::move(key));
  }

  for (std::uint32_t id = 0; id < index.key_count(); ++id) {
    const auto& key = index.key(id);
    if (key == qkey || fuzzy.count(key) != 0) continue;
    if (expansion_match(qkey, key)) take_key(key, MatchClass::Expansion, 0);
  }

  std::sort(out.begin(), out.end(), recommendation_less);
  if (out.size() > params.top_k) out.resize(params.top_k);
  return out;
}

IssueFlags classify_issues(const CorpusSnapshot& s, FieldKind field, std::string_view query,
                           const std::vector<Recommendation>& recs, const MatchParams& params) {
  IssueFlags flags;
  const auto qkey = normalize(query);
  const auto& index = s.field_index(field);
  const auto seen = index.variants(qkey);

  if (!seen.empty()) {
    const auto& top = seen.front().surface;
    if (top != query && iequals(top, query)) flags.set(Issue::Casing);
  } else if (casing_checked(field) && has_lowercase_initial(query, params.casing_stopwords)) {
    flags.set(Issue::Casing);
  }

  // An unseen key misspells any Fuzzy neighbour; a seen one only a much more
  // common neighbour.
  const double floor = params.spelling_ratio * static_cast<double>(index.key_support(qkey));
  const bool spelling = std::any_of(recs.begin(), recs.end(), [&](const auto& r) {
    return r.match_class == MatchClass::Fuzzy && static_cast<double>(r.support) >= floor;
  });
  if (spelling) flags.set(Issue::Spelling);

  std::vector<const Recommendation*> expansions;
  for (const auto& r : recs) {
    if (r.match_class == MatchClass::Expansion) expansions.push_back(&r);
  }

  if (is_entity_field(field) && expansions.size() >= 2) {
    // Top two expansions that name different keys.
    const Recommendation* first = expansions.front();
    const auto first_key = normalize(first->surface);
    for (std::size_t i = 1; i < expansions.size(); ++i) {
      if (normalize(expansions[i]->surface) == first_key) continue;
      const double ratio =
          static_cast<double>(first->support) / static_cast<double>(expansions[i]->support);
      if (ratio < params.ambiguity_ratio) flags.set(Issue::Ambiguity);
      break;
    }
  }

  if (!expansions.empty() && !spelling) flags.set(Issue::Specificity);
  return flags;
}

}  // namespace cvlint
