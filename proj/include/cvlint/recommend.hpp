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
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cvlint/matching.hpp"
#include "cvlint/snapshot.hpp"

namespace cvlint {

/// Declared in priority order; lower value sorts first.
enum class MatchClass { ExactKey, Expansion, Fuzzy };

std::string_view to_string(MatchClass c);

struct Recommendation {
  std::string surface;
  std::uint64_t support = 0;
  MatchClass match_class = MatchClass::ExactKey;
  std::size_t distance = 0;  // non-zero only for Fuzzy

  bool operator==(const Recommendation&) const = default;
};

struct MatchParams {
  std::size_t top_k = 3;
  std::uint64_t min_support = 5;
  DistanceBudget budget;
  double ambiguity_ratio = 3.0;
  // A query is a likely misspelling when a Fuzzy recommendation is at least
  // this many times as common as the query's own key.
  double spelling_ratio = 10.0;
  // Tokens ignored by the lowercase-initial casing check.
  std::vector<std::string> casing_stopwords = {"of", "and", "the", "for", "in", "at", "on", "de"};

  /// Throws Error(InvalidArgument).
  void validate() const;

  bool operator==(const MatchParams&) const = default;
};

enum class Issue { Specificity, Spelling, Casing, Ambiguity };

std::string_view to_string(Issue issue);

class IssueFlags {
 public:
  void set(Issue i) { bits_ |= bit(i); }
  bool has(Issue i) const { return (bits_ & bit(i)) != 0; }
  bool empty() const { return bits_ == 0; }
  std::vector<Issue> list() const;

  bool operator==(const IssueFlags&) const = default;

 private:
  static std::uint8_t bit(Issue i) { return static_cast<std::uint8_t>(1u << static_cast<int>(i)); }
  std::uint8_t bits_ = 0;
};

/// Candidate class for one indexed key against the query key, or nullopt
/// when it is none of them. A key within the typo budget is Fuzzy even if
/// it would also pass expansion_match.
std::optional<MatchClass> classify_candidate(std::string_view query_key,
                                             std::string_view candidate_key,
                                             const MatchParams& params);

/// Top-k surfaces for `query`: same-key variants, spelled-out expansions and
/// near-miss spellings, each with support >= min_support. The query itself
/// is never returned. Ordered by class, support descending, then surface.
/// Throws Error(EmptyQuery) when the query normalizes to nothing.
std::vector<Recommendation> recommend(const CorpusSnapshot& s, FieldKind field,
                                      std::string_view query, const MatchParams& params);

IssueFlags classify_issues(const CorpusSnapshot& s, FieldKind field, std::string_view query,
                           const std::vector<Recommendation>& recs, const MatchParams& params);

}  // namespace cvlint
