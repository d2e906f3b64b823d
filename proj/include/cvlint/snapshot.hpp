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
#include <compare>
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cvlint/frequency_index.hpp"
#include "cvlint/profile.hpp"

namespace cvlint {

enum class CohortCriterion { LastSchool, DegreeLevel, Global };

std::string_view to_string(CohortCriterion c);
std::optional<CohortCriterion> parse_cohort_criterion(std::string_view name);

struct CohortKey {
  CohortCriterion criterion = CohortCriterion::Global;
  std::string value;  // empty for Global

  static CohortKey global() { return {}; }

  auto operator<=>(const CohortKey&) const = default;
  bool operator==(const CohortKey&) const = default;
};

/// "bachelor", "master", "doctorate" or "other", by keyword match on the
/// normalized degree name.
std::string degree_level(std::string_view degree_name);

/// The education instance with the greatest end_year (ties and undated
/// sections resolve to the first listed), or nullptr.
const Education* last_graduated(const Profile& p);

/// Cohort of `p` under `criterion`; nullopt when the profile has no value
/// for it (e.g. no education).
std::optional<CohortKey> cohort_of(const Profile& p, CohortCriterion criterion);

struct BuildConfig {
  CohortCriterion cohort_criterion = CohortCriterion::LastSchool;
  std::uint32_t min_cohort_size = 50;
  char trigram_pad = '$';

  /// Throws Error(InvalidArgument).
  void validate() const;

  bool operator==(const BuildConfig&) const = default;
};

struct CohortCounts {
  std::uint64_t size = 0;
  std::array<std::uint64_t, std::size(kAllSectionKinds)> presence{};

  bool operator==(const CohortCounts&) const = default;
};

struct CohortRate {
  double rate = 0.0;
  std::uint64_t cohort_size = 0;
};

/// Section presence per cohort. Every profile lands in Global and in at most
/// one cohort per non-global criterion.
class CohortStats {
 public:
  void add(const Profile& p);
  CohortRate rate(const CohortKey& key, SectionKind kind) const;
  std::uint64_t size(const CohortKey& key) const;

  const std::map<CohortKey, CohortCounts>& cohorts() const { return cohorts_; }
  std::map<CohortKey, CohortCounts>& mutable_cohorts() { return cohorts_; }

  bool operator==(const CohortStats&) const = default;

 private:
  std::map<CohortKey, CohortCounts> cohorts_;
};

struct NameEntry {
  SourceTag source = SourceTag::PrimaryNetwork;
  std::string id;
  std::string display_name;
  std::string headline;
  std::optional<std::string> last_institution;
  std::string last_institution_key;

  bool operator==(const NameEntry&) const = default;
};

struct ProfileMatch {
  SourceTag source = SourceTag::PrimaryNetwork;
  std::string id;
  std::string display_name;
  std::string headline;
  std::optional<std::string> last_institution;

  bool operator==(const ProfileMatch&) const = default;
};

/// (normalized first name, normalized last name) -> entries ordered by
/// source then id.
using NameIndex = std::map<std::pair<std::string, std::string>, std::vector<NameEntry>>;

struct IngestStats {
  std::uint64_t records = 0;
  std::uint64_t parse_failures = 0;
  std::uint64_t dropped_instances = 0;

  bool operator==(const IngestStats&) const = default;
};

using Digest = std::array<std::uint8_t, 32>;

std::string to_hex(const Digest& d);

/// Immutable corpus index. Built by Ingestor, persisted by save_snapshot.
class CorpusSnapshot {
 public:
  std::uint64_t profile_count() const { return profile_count_; }
  const IngestStats& ingest_stats() const { return stats_; }
  const BuildConfig& build_config() const { return config_; }
  const Digest& content_digest() const { return digest_; }
  std::string digest_hex() const { return to_hex(digest_); }

  const FrequencyIndex& field_index(FieldKind kind) const {
    return fields_[static_cast<std::size_t>(kind)];
  }
  const CohortStats& cohort_stats() const { return cohorts_; }
  const NameIndex& name_index() const { return names_; }

  /// Canonical document of a stored profile.
  const std::string* document(SourceTag source, std::string_view id) const;
  const std::map<std::pair<SourceTag, std::string>, std::string>& documents() const {
    return documents_;
  }

  bool operator==(const CorpusSnapshot&) const = default;

 private:
  friend class Ingestor;
  friend class SnapshotReader;

  std::uint64_t profile_count_ = 0;
  IngestStats stats_;
  BuildConfig config_;
  Digest digest_{};
  std::array<FrequencyIndex, std::size(kAllFieldKinds)> fields_;
  CohortStats cohorts_;
  NameIndex names_;
  std::map<std::pair<SourceTag, std::string>, std::string> documents_;
};

/// Staged build: parse each record, extract field values, then freeze the
/// statistics in finish(). Unparseable records and duplicate (source, id)
/// pairs are counted and skipped.
class Ingestor {
 public:
  explicit Ingestor(BuildConfig config);

  /// Returns false when the record was rejected.
  bool add_document(std::string_view doc);

  /// Throws Error(EmptyCorpus) when no record parsed.
  CorpusSnapshot finish() &&;

  const IngestStats& stats() const { return stats_; }

 private:
  BuildConfig config_;
  IngestStats stats_;
  std::uint64_t profile_count_ = 0;
  std::array<std::map<std::string, std::uint64_t>, std::size(kAllFieldKinds)> supports_;
  CohortStats cohorts_;
  NameIndex names_;
  std::map<std::pair<SourceTag, std::string>, std::string> documents_;
  struct HashState;
  std::shared_ptr<HashState> hash_;
};

CorpusSnapshot ingest(std::span<const std::string> docs, const BuildConfig& config);

/// Newline-delimited corpus files, read in the given order. Blank lines are
/// skipped. Throws Error(IoFailure) for unreadable files.
CorpusSnapshot ingest_files(std::span<const std::filesystem::path> files,
                            const BuildConfig& config);

std::uint64_t support(const CorpusSnapshot& s, FieldKind kind, std::string_view surface);
std::vector<SurfaceCount> variants(const CorpusSnapshot& s, FieldKind kind, std::string_view key);
std::vector<std::string> fuzzy_candidates(const CorpusSnapshot& s, FieldKind kind,
                                          std::string_view key, std::size_t max_dist);
CohortRate cohort_rate(const CorpusSnapshot& s, const CohortKey& cohort, SectionKind kind);

/// Case-insensitive match on normalized first and last name. A non-blank
/// `institution` keeps only matches whose last institution key contains every
/// normalized institution token.
std::vector<ProfileMatch> search_profiles(const CorpusSnapshot& s, std::string_view first,
                                          std::string_view last,
                                          std::optional<std::string_view> institution = {});

inline constexpr std::uint32_t kSnapshotFormatVersion = 1;

void save_snapshot(const CorpusSnapshot& s, const std::filesystem::path& path);
CorpusSnapshot load_snapshot(const std::filesystem::path& path);

std::string encode_snapshot(const CorpusSnapshot& s);
/// Throws Error(VersionMismatch) or Error(DigestMismatch).
CorpusSnapshot decode_snapshot(std::string_view bytes);

}  // namespace cvlint
