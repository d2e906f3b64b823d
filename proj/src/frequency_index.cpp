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

#include "cvlint/frequency_index.hpp"

#include <algorithm>
#include <unordered_set>

#include "cvlint/distance.hpp"
#include "cvlint/normalize.hpp"

namespace cvlint {

namespace {

// One edit destroys at most this many trigram occurrences (a transposition
// touches two adjacent bytes, hence four windows).
constexpr std::size_t kGramsPerEdit = 4;

}  // namespace

FrequencyIndex::FrequencyIndex(std::map<std::string, std::uint64_t> supports, char pad)
    : pad_(pad), supports_(std::move(supports)) {
  std::map<std::string, KeyEntry> grouped;
  for (const auto& [surface, count] : supports_) {
    if (count == 0) continue;
    total_ += count;
    auto k = normalize(surface);
    if (k.empty()) continue;  // all punctuation: countable but not matchable
    auto& entry = grouped[k];
    entry.key = k;
    entry.total += count;
    entry.variants.push_back({surface, count});
  }
  std::erase_if(supports_, [](const auto& kv) { return kv.second == 0; });

  keys_.reserve(grouped.size());
  for (auto& [k, entry] : grouped) {
    std::sort(entry.variants.begin(), entry.variants.end(), [](const auto& a, const auto& b) {
      return a.support != b.support ? a.support > b.support : a.surface < b.surface;
    });
    keys_.push_back(std::move(entry));
  }

  for (std::uint32_t id = 0; id < keys_.size(); ++id) {
    for (auto& gram : trigrams(keys_[id].key, pad_)) postings_[std::move(gram)].push_back(id);
    by_length_[keys_[id].key.size()].push_back(id);
  }
}

std::vector<std::string> FrequencyIndex::trigrams(std::string_view key, char pad) {
  std::vector<std::string> grams;
  if (key.size() < 3) {
    std::string g(key);
    g.resize(3, pad);
    grams.push_back(std::move(g));
    return grams;
  }
  for (std::size_t i = 0; i + 3 <= key.size(); ++i) grams.emplace_back(key.substr(i, 3));
  std::sort(grams.begin(), grams.end());
  grams.erase(std::unique(grams.begin(), grams.end()), grams.end());
  return grams;
}

std::uint64_t FrequencyIndex::support(std::string_view surface) const {
  auto it = supports_.find(std::string(surface));
  return it == supports_.end() ? 0 : it->second;
}

const FrequencyIndex::KeyEntry* FrequencyIndex::find_key(std::string_view key) const {
  auto it = std::lower_bound(keys_.begin(), keys_.end(), key,
                             [](const KeyEntry& e, std::string_view k) { return e.key < k; });
  return it != keys_.end() && it->key == key ? &*it : nullptr;
}

std::uint64_t FrequencyIndex::key_support(std::string_view key) const {
  const auto* e = find_key(key);
  return e ? e->total : 0;
}

std::span<const SurfaceCount> FrequencyIndex::variants(std::string_view key) const {
  const auto* e = find_key(key);
  if (!e) return {};
  return e->variants;
}

std::span<const std::uint32_t> FrequencyIndex::postings(std::string_view gram) const {
  auto it = postings_.find(std::string(gram));
  if (it == postings_.end()) return {};
  return it->second;
}

std::vector<std::string> FrequencyIndex::fuzzy_candidates(std::string_view key,
                                                          std::size_t max_dist) const {
  std::vector<std::uint32_t> pool;

  const auto grams = trigrams(key, pad_);
  const bool gram_filter = key.size() >= 3 && grams.size() > kGramsPerEdit * max_dist;
  if (gram_filter) {
    const std::size_t needed = grams.size() - kGramsPerEdit * max_dist;
    std::unordered_map<std::uint32_t, std::size_t> shared;
    for (const auto& g : grams) {
      for (auto id : postings(g)) ++shared[id];
    }
    for (const auto& [id, count] : shared) {
      if (count >= needed) pool.push_back(id);
    }
  } else {
    const std::size_t lo = key.size() > max_dist ? key.size() - max_dist : 0;
    for (auto it = by_length_.lower_bound(lo);
         it != by_length_.end() && it->first <= key.size() + max_dist; ++it) {
      pool.insert(pool.end(), it->second.begin(), it->second.end());
    }
  }

  std::vector<std::string> out;
  for (auto id : pool) {
    const auto& candidate = keys_[id].key;
    if (dl_distance_bounded(key, candidate, max_dist) <= max_dist) out.push_back(candidate);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cvlint
