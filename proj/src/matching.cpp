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

#include "cvlint/matching.hpp"

#include <string>
#include <vector>

#include "cvlint/normalize.hpp"

namespace cvlint {

namespace {

constexpr std::size_t kMinAbbreviation = 3;
constexpr std::size_t kMaxFragment = 2;

bool is_subsequence(std::string_view q, std::string_view c) {
  std::size_t pos = 0;
  for (char ch : c) {
    if (pos < q.size() && q[pos] == ch) ++pos;
  }
  return pos == q.size();
}

// End position (exclusive) of a fragment run starting at `start` whose
// concatenation equals `q`, or 0.
std::size_t fragment_run_end(std::string_view q, const std::vector<std::string_view>& c,
                             std::size_t start) {
  std::string joined;
  for (std::size_t j = start; j < c.size() && c[j].size() <= kMaxFragment; ++j) {
    joined.append(c[j]);
    if (joined.size() > q.size() || q.compare(0, joined.size(), joined) != 0) return 0;
    if (joined.size() == q.size()) return j - start >= 1 ? j + 1 : 0;
  }
  return 0;
}

}  // namespace

bool token_matches(std::string_view q, std::string_view c) {
  if (q == c) return true;
  if (q.size() < kMinAbbreviation || c.empty() || q.front() != c.front()) return false;
  if (c.substr(0, q.size()) == q) return true;
  return is_subsequence(q, c);
}

bool expansion_match(std::string_view query_key, std::string_view candidate_key) {
  if (query_key == candidate_key) return false;
  const auto q = tokens(query_key);
  const auto c = tokens(candidate_key);
  if (q.empty() || c.size() < q.size()) return false;

  std::size_t pos = 0;
  for (auto qt : q) {
    std::size_t best_end = 0;
    for (std::size_t j = pos; j < c.size(); ++j) {
      if (best_end != 0 && j + 1 >= best_end) break;
      std::size_t end = token_matches(qt, c[j]) ? j + 1 : fragment_run_end(qt, c, j);
      if (end != 0 && (best_end == 0 || end < best_end)) best_end = end;
    }
    if (best_end == 0) return false;
    pos = best_end;
  }
  return true;
}

}  // namespace cvlint
