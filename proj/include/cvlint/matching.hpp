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
#include <string_view>

namespace cvlint {

/// Typo budget by normalized key length in bytes.
struct DistanceBudget {
  std::size_t short_max_len = 4;   // keys up to this length get 1 edit
  std::size_t medium_max_len = 8;  // up to this, 2 edits; longer keys get 3

  std::size_t operator()(std::size_t key_length) const {
    if (key_length <= short_max_len) return 1;
    if (key_length <= medium_max_len) return 2;
    return 3;
  }

  bool operator==(const DistanceBudget&) const = default;
};

/// Query token `q` matches candidate token `c` when they are equal, when `q`
/// (at least 3 bytes) is a prefix of `c`, or when `q` (at least 3 bytes) is a
/// subsequence of `c` starting with the same byte ("engr" / "engineer").
bool token_matches(std::string_view q, std::string_view c);

/// True when `candidate_key` spells out `query_key`: it has at least as many
/// tokens, differs from the query, and each query token matches a later
/// candidate token in order. A query token may also equal a run of adjacent
/// candidate tokens of at most two bytes each, so "bsc" is found in the
/// dotted form "b sc".
bool expansion_match(std::string_view query_key, std::string_view candidate_key);

}  // namespace cvlint
