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

#include <random>
#include <string>

#include <catch2/catch_amalgamated.hpp>

#include "cvlint/distance.hpp"
#include "oracles.hpp"

using cvlint::dl_distance;
using cvlint::dl_distance_bounded;
using cvlint::testing::bfs_edit_distance;
using cvlint::testing::reference_dl;

namespace {

std::string random_string(std::mt19937_64& rng, const std::string& alphabet, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::string s;
  for (std::size_t n = len(rng); n > 0; --n) s += alphabet[pick(rng)];
  return s;
}

}  // namespace

TEST_CASE("known distances") {
  CHECK(dl_distance("", "") == 0);
  CHECK(dl_distance("abc", "") == 3);
  CHECK(dl_distance("asistant", "assistant") == 1);
  CHECK(dl_distance("ab", "ba") == 1);
  CHECK(dl_distance("ca", "abc") == 2);  // restricted (OSA) distance would be 3
  CHECK(dl_distance("kitten", "sitting") == 3);
  CHECK(dl_distance("engr", "engg") == 1);
}

TEST_CASE("agrees with breadth-first search over edit operations") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const auto a = random_string(rng, "abc", 5);
    const auto b = random_string(rng, "abc", 5);
    INFO(a << " / " << b);
    CHECK(dl_distance(a, b) == bfs_edit_distance(a, b));
  }
}

TEST_CASE("agrees with the reference matrix on longer strings") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 2000; ++i) {
    const auto a = random_string(rng, "abcde ", 20);
    const auto b = random_string(rng, "abcde ", 20);
    CHECK(dl_distance(a, b) == reference_dl(a, b));
  }
}

TEST_CASE("bounded distance is exact within the limit") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 2000; ++i) {
    const auto a = random_string(rng, "abcd", 12);
    const auto b = random_string(rng, "abcd", 12);
    const auto d = dl_distance(a, b);
    for (std::size_t k = 0; k <= 4; ++k) {
      const auto bd = dl_distance_bounded(a, b, k);
      if (d <= k) {
        CHECK(bd == d);
      } else {
        CHECK(bd > k);
      }
    }
  }
}

TEST_CASE("metric axioms") {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 1000; ++i) {
    const auto a = random_string(rng, "abcd", 10);
    const auto b = random_string(rng, "abcd", 10);
    const auto c = random_string(rng, "abcd", 10);
    CHECK(dl_distance(a, a) == 0);
    CHECK((dl_distance(a, b) == 0) == (a == b));
    CHECK(dl_distance(a, b) == dl_distance(b, a));
    CHECK(dl_distance(a, c) <= dl_distance(a, b) + dl_distance(b, c));
  }
}
