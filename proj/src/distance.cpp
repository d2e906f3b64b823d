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

#include "cvlint/distance.hpp"

#include <algorithm>
#include <array>
#include <vector>

namespace cvlint {

// Lowrance-Wagner. `last_row[c]` is the last row of `a` holding byte c seen
// so far; `last_col` the last column of `b` matching a[i-1] in this row.
std::size_t dl_distance(std::string_view a, std::string_view b) {
  const std::size_t m = a.size();
  const std::size_t n = b.size();
  if (m == 0) return n;
  if (n == 0) return m;

  const std::size_t inf = m + n;
  const std::size_t width = n + 2;
  std::vector<std::size_t> d((m + 2) * width);
  auto at = [&](std::size_t i, std::size_t j) -> std::size_t& { return d[i * width + j]; };

  at(0, 0) = inf;
  for (std::size_t i = 0; i <= m; ++i) {
    at(i + 1, 0) = inf;
    at(i + 1, 1) = i;
  }
  for (std::size_t j = 0; j <= n; ++j) {
    at(0, j + 1) = inf;
    at(1, j + 1) = j;
  }

  std::array<std::size_t, 256> last_row{};
  for (std::size_t i = 1; i <= m; ++i) {
    std::size_t last_col = 0;
    const auto ai = static_cast<unsigned char>(a[i - 1]);
    for (std::size_t j = 1; j <= n; ++j) {
      const auto bj = static_cast<unsigned char>(b[j - 1]);
      const std::size_t i1 = last_row[bj];
      const std::size_t j1 = last_col;
      std::size_t cost = 1;
      if (ai == bj) {
        cost = 0;
        last_col = j;
      }
      at(i + 1, j + 1) = std::min({at(i, j) + cost, at(i + 1, j) + 1, at(i, j + 1) + 1,
                                   at(i1, j1) + (i - i1 - 1) + 1 + (j - j1 - 1)});
    }
    last_row[ai] = i;
  }
  return at(m + 1, n + 1);
}

std::size_t dl_distance_bounded(std::string_view a, std::string_view b, std::size_t limit) {
  const std::size_t gap = a.size() > b.size() ? a.size() - b.size() : b.size() - a.size();
  if (gap > limit) return gap;
  return dl_distance(a, b);
}

}  // namespace cvlint
