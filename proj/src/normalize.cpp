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

#include "cvlint/normalize.hpp"

#include <algorithm>
#include <cctype>

namespace cvlint {

namespace {

bool ascii_space(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

bool ascii_punct(unsigned char c) { return c < 0x80 && std::ispunct(c) != 0; }

// U+2018 / U+2019 as UTF-8.
bool ends_with_curly_apostrophe(const std::string& s) {
  const auto n = s.size();
  return n >= 3 && static_cast<unsigned char>(s[n - 3]) == 0xE2 &&
         static_cast<unsigned char>(s[n - 2]) == 0x80 &&
         (static_cast<unsigned char>(s[n - 1]) == 0x98 ||
          static_cast<unsigned char>(s[n - 1]) == 0x99);
}

// U+2010..U+2027 except the two apostrophes.
bool ends_with_general_punct(const std::string& s) {
  const auto n = s.size();
  if (n < 3) return false;
  const auto c0 = static_cast<unsigned char>(s[n - 3]);
  const auto c1 = static_cast<unsigned char>(s[n - 2]);
  const auto c2 = static_cast<unsigned char>(s[n - 1]);
  return c0 == 0xE2 && c1 == 0x80 && c2 >= 0x90 && c2 <= 0xA7 && c2 != 0x98 && c2 != 0x99;
}

}  // namespace

std::string normalize(std::string_view s) {
  std::string folded;
  folded.reserve(s.size());
  for (unsigned char c : s) {
    if (c == '\'') continue;
    if (ascii_punct(c)) {
      folded.push_back(' ');
      continue;
    }
    folded.push_back(static_cast<char>(c < 0x80 ? std::tolower(c) : c));
    if (ends_with_curly_apostrophe(folded)) {
      folded.resize(folded.size() - 3);
    } else if (ends_with_general_punct(folded)) {
      folded.resize(folded.size() - 3);
      folded.push_back(' ');
    }
  }

  std::string out;
  out.reserve(folded.size());
  bool pending_space = false;
  for (unsigned char c : folded) {
    if (ascii_space(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(static_cast<char>(c));
  }
  return out;
}

std::vector<std::string_view> tokens(std::string_view key) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start < key.size()) {
    auto end = key.find(' ', start);
    if (end == std::string_view::npos) end = key.size();
    if (end > start) out.push_back(key.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](unsigned char x, unsigned char y) {
           return std::tolower(x) == std::tolower(y);
         });
}

}  // namespace cvlint
