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
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace cvlint {

struct SurfaceCount {
  std::string surface;
  std::uint64_t support = 0;

  bool operator==(const SurfaceCount&) const = default;
};

/// Usage counts for one field across the corpus.
///
/// Surfaces are counted byte-exact. Surfaces sharing a normalized key are
/// grouped under that key (support descending, then surface ascending), and
/// every key is posted under each of its distinct character trigrams. Keys
/// shorter than three bytes get one gram padded with `pad`, so they are still
/// reachable through the postings.
class FrequencyIndex {
 public:
  FrequencyIndex() = default;
  FrequencyIndex(std::map<std::string, std::uint64_t> supports, char pad);

  std::uint64_t support(std::string_view surface) const;
  std::uint64_t key_support(std::string_view key) const;
  std::span<const SurfaceCount> variants(std::string_view key) const;

  /// Keys within Damerau-Levenshtein distance `max_dist` of `key`, sorted.
  /// Uses the trigram count filter when it can prune, then the length
  /// filter, then the exact distance.
  std::vector<std::string> fuzzy_candidates(std::string_view key, std::size_t max_dist) const;

  /// Key ids posted under `gram`.
  std::span<const std::uint32_t> postings(std::string_view gram) const;

  const std::map<std::string, std::uint64_t>& surfaces() const { return supports_; }
  std::size_t key_count() const { return keys_.size(); }
  const std::string& key(std::uint32_t id) const { return keys_[id].key; }
  std::uint64_t total_support() const { return total_; }
  char pad() const { return pad_; }

  static std::vector<std::string> trigrams(std::string_view key, char pad);

  bool operator==(const FrequencyIndex& other) const {
    return pad_ == other.pad_ && supports_ == other.supports_;
  }

 private:
  struct KeyEntry {
    std::string key;
    std::uint64_t total = 0;
    std::vector<SurfaceCount> variants;
  };

  const KeyEntry* find_key(std::string_view key) const;

  char pad_ = '$';
  std::uint64_t total_ = 0;
  std::map<std::string, std::uint64_t> supports_;
  std::vector<KeyEntry> keys_;  // sorted by key
  std::unordered_map<std::string, std::vector<std::uint32_t>> postings_;
  std::map<std::size_t, std::vector<std::uint32_t>> by_length_;
};

}  // namespace cvlint
