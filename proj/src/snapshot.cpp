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

#include "cvlint/snapshot.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>

#include "cvlint/error.hpp"
#include "cvlint/normalize.hpp"
#include "sha256.hpp"

namespace cvlint {

namespace {

constexpr std::size_t kHeadlineSnippet = 80;

const std::set<std::string, std::less<>> kDoctorateWords = {"phd", "dphil", "doctor", "doctorate",
                                                            "edd", "dba", "md"};
const std::set<std::string, std::less<>> kMasterWords = {
    "master", "masters", "mba", "msc", "ma", "meng", "mphil", "ms", "mcom", "mpa", "llm", "mfa"};
const std::set<std::string, std::less<>> kBachelorWords = {
    "bachelor", "bachelors", "bsc", "ba", "beng", "bs", "bba", "bcom", "llb", "bfa", "bacc"};

// Plain tokens plus the concatenation of each run of 1-2 byte fragments, so
// "ph d" and "m sc" read as "phd" and "msc".
std::vector<std::string> degree_words(std::string_view key) {
  std::vector<std::string> out;
  std::string run;
  std::size_t run_len = 0;
  auto flush = [&] {
    if (run_len >= 2) out.push_back(run);
    run.clear();
    run_len = 0;
  };
  for (auto t : tokens(key)) {
    out.emplace_back(t);
    if (t.size() <= 2) {
      run.append(t);
      ++run_len;
    } else {
      flush();
    }
  }
  flush();
  return out;
}

std::string utf8_prefix(std::string_view s, std::size_t max_bytes) {
  if (s.size() <= max_bytes) return std::string(s);
  std::size_t cut = max_bytes;
  while (cut > 0 && (static_cast<unsigned char>(s[cut]) & 0xC0) == 0x80) --cut;
  return std::string(s.substr(0, cut));
}

void put_u64(std::string& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

}  // namespace

std::string_view to_string(CohortCriterion c) {
  switch (c) {
    case CohortCriterion::LastSchool: return "LastSchool";
    case CohortCriterion::DegreeLevel: return "DegreeLevel";
    case CohortCriterion::Global: return "Global";
  }
  return "Global";
}

std::optional<CohortCriterion> parse_cohort_criterion(std::string_view name) {
  for (auto c : {CohortCriterion::LastSchool, CohortCriterion::DegreeLevel,
                 CohortCriterion::Global}) {
    if (to_string(c) == name) return c;
  }
  return std::nullopt;
}

std::string degree_level(std::string_view degree_name) {
  const auto words = degree_words(normalize(degree_name));
  auto any_in = [&](const auto& set) {
    return std::any_of(words.begin(), words.end(),
                       [&](const std::string& w) { return set.count(w) != 0; });
  };
  if (any_in(kDoctorateWords)) return "doctorate";
  if (any_in(kMasterWords)) return "master";
  if (any_in(kBachelorWords)) return "bachelor";
  return "other";
}

const Education* last_graduated(const Profile& p) {
  const Education* best = nullptr;
  const Education* first = nullptr;
  for (const auto& inst : p.instances(SectionKind::Education)) {
    const auto* e = std::get_if<Education>(&inst);
    if (!e) continue;
    if (!first) first = e;
    if (e->end_year && (!best || *e->end_year > *best->end_year)) best = e;
  }
  return best ? best : first;
}

std::optional<CohortKey> cohort_of(const Profile& p, CohortCriterion criterion) {
  if (criterion == CohortCriterion::Global) return CohortKey::global();
  const auto* last = last_graduated(p);
  if (!last) return std::nullopt;
  if (criterion == CohortCriterion::LastSchool) {
    auto key = normalize(last->school_name);
    if (key.empty()) return std::nullopt;
    return CohortKey{criterion, std::move(key)};
  }
  return CohortKey{criterion, degree_level(last->degree_name)};
}

void BuildConfig::validate() const {
  if (min_cohort_size < 1) throw Error(ErrorCode::InvalidArgument, "min_cohort_size must be >= 1");
  const auto pad = static_cast<unsigned char>(trigram_pad);
  if (pad >= 0x80 || std::ispunct(pad) == 0) {
    throw Error(ErrorCode::InvalidArgument,
                "trigram_pad must be a punctuation byte that cannot occur in a normalized key");
  }
}

void CohortStats::add(const Profile& p) {
  for (auto criterion :
       {CohortCriterion::LastSchool, CohortCriterion::DegreeLevel, CohortCriterion::Global}) {
    auto key = cohort_of(p, criterion);
    if (!key) continue;
    auto& counts = cohorts_[*key];
    ++counts.size;
    for (auto kind : kAllSectionKinds) {
      if (section_present(p, kind)) ++counts.presence[static_cast<std::size_t>(kind)];
    }
  }
}

CohortRate CohortStats::rate(const CohortKey& key, SectionKind kind) const {
  auto it = cohorts_.find(key);
  if (it == cohorts_.end() || it->second.size == 0) return {};
  const auto present = it->second.presence[static_cast<std::size_t>(kind)];
  return {static_cast<double>(present) / static_cast<double>(it->second.size), it->second.size};
}

std::uint64_t CohortStats::size(const CohortKey& key) const {
  auto it = cohorts_.find(key);
  return it == cohorts_.end() ? 0 : it->second.size;
}

std::string to_hex(const Digest& d) {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(d.size() * 2);
  for (auto b : d) {
    out.push_back(kHex[b >> 4]);
    out.push_back(kHex[b & 0xF]);
  }
  return out;
}

const std::string* CorpusSnapshot::document(SourceTag source, std::string_view id) const {
  auto it = documents_.find({source, std::string(id)});
  return it == documents_.end() ? nullptr : &it->second;
}

struct Ingestor::HashState {
  detail::Sha256 sha;
};

Ingestor::Ingestor(BuildConfig config)
    : config_(config), hash_(std::make_shared<HashState>()) {
  config_.validate();
  hash_->sha.update(std::string_view("cvlint-corpus\0", 14));
}

bool Ingestor::add_document(std::string_view doc) {
  ++stats_.records;
  std::string len;
  put_u64(len, doc.size());
  hash_->sha.update(len);
  hash_->sha.update(doc);

  ParsedProfile parsed;
  try {
    parsed = parse_profile(doc);
  } catch (const Error&) {
    ++stats_.parse_failures;
    return false;
  }
  const Profile& p = parsed.profile;
  auto doc_key = std::make_pair(p.source, p.id);
  if (documents_.count(doc_key) != 0) {
    ++stats_.parse_failures;
    return false;
  }
  documents_.emplace(std::move(doc_key), serialize_profile(p));
  stats_.dropped_instances += parsed.dropped_instances;
  ++profile_count_;

  for (const auto& [kind, list] : p.sections) {
    for (const auto& inst : list) {
      for (auto field : fields_of(kind)) {
        auto value = field_value(inst, field);
        if (value && !is_blank(*value)) {
          ++supports_[static_cast<std::size_t>(field)][std::string(*value)];
        }
      }
    }
  }
  cohorts_.add(p);

  NameEntry entry;
  entry.source = p.source;
  entry.id = p.id;
  entry.display_name = p.basic.first_name + " " + p.basic.last_name;
  entry.headline = utf8_prefix(p.basic.headline.value_or(""), kHeadlineSnippet);
  if (const auto* last = last_graduated(p)) {
    entry.last_institution = last->school_name;
    entry.last_institution_key = normalize(last->school_name);
  }
  names_[{normalize(p.basic.first_name), normalize(p.basic.last_name)}].push_back(
      std::move(entry));
  return true;
}

CorpusSnapshot Ingestor::finish() && {
  if (profile_count_ == 0) {
    throw Error(ErrorCode::EmptyCorpus, "no parseable profiles in " +
                                            std::to_string(stats_.records) + " records");
  }
  std::string cfg;
  cfg.push_back(static_cast<char>(config_.cohort_criterion));
  put_u64(cfg, config_.min_cohort_size);
  cfg.push_back(config_.trigram_pad);
  hash_->sha.update(cfg);

  CorpusSnapshot s;
  s.profile_count_ = profile_count_;
  s.stats_ = stats_;
  s.config_ = config_;
  s.digest_ = hash_->sha.finish();
  for (std::size_t i = 0; i < supports_.size(); ++i) {
    s.fields_[i] = FrequencyIndex(std::move(supports_[i]), config_.trigram_pad);
  }
  s.cohorts_ = std::move(cohorts_);
  for (auto& [name, entries] : names_) {
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
      return std::tie(a.source, a.id) < std::tie(b.source, b.id);
    });
  }
  s.names_ = std::move(names_);
  s.documents_ = std::move(documents_);
  return s;
}

CorpusSnapshot ingest(std::span<const std::string> docs, const BuildConfig& config) {
  Ingestor ingestor(config);
  for (const auto& d : docs) {
    if (!is_blank(d)) ingestor.add_document(d);
  }
  return std::move(ingestor).finish();
}

CorpusSnapshot ingest_files(std::span<const std::filesystem::path> files,
                            const BuildConfig& config) {
  Ingestor ingestor(config);
  for (const auto& path : files) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoFailure, "cannot open corpus file " + path.string());
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!is_blank(line)) ingestor.add_document(line);
    }
    if (in.bad()) throw Error(ErrorCode::IoFailure, "read error on " + path.string());
  }
  return std::move(ingestor).finish();
}

std::uint64_t support(const CorpusSnapshot& s, FieldKind kind, std::string_view surface) {
  return s.field_index(kind).support(surface);
}

std::vector<SurfaceCount> variants(const CorpusSnapshot& s, FieldKind kind,
                                   std::string_view key) {
  auto v = s.field_index(kind).variants(key);
  return {v.begin(), v.end()};
}

std::vector<std::string> fuzzy_candidates(const CorpusSnapshot& s, FieldKind kind,
                                          std::string_view key, std::size_t max_dist) {
  if (max_dist < 1 || max_dist > 3) {
    throw Error(ErrorCode::InvalidArgument, "max_dist must be in [1, 3]");
  }
  return s.field_index(kind).fuzzy_candidates(key, max_dist);
}

CohortRate cohort_rate(const CorpusSnapshot& s, const CohortKey& cohort, SectionKind kind) {
  return s.cohort_stats().rate(cohort, kind);
}

std::vector<ProfileMatch> search_profiles(const CorpusSnapshot& s, std::string_view first,
                                          std::string_view last,
                                          std::optional<std::string_view> institution) {
  auto first_key = normalize(first);
  auto last_key = normalize(last);
  if (first_key.empty() || last_key.empty()) {
    throw Error(ErrorCode::InvalidArgument, "first and last name are required");
  }
  std::vector<ProfileMatch> out;
  auto it = s.name_index().find({first_key, last_key});
  if (it == s.name_index().end()) return out;

  std::vector<std::string> wanted;
  if (institution) {
    const auto inst_key = normalize(*institution);
    for (auto t : tokens(inst_key)) wanted.emplace_back(t);
  }
  for (const auto& e : it->second) {
    if (!wanted.empty()) {
      const auto have = tokens(e.last_institution_key);
      const bool keep = std::all_of(wanted.begin(), wanted.end(), [&](const std::string& w) {
        return std::find(have.begin(), have.end(), w) != have.end();
      });
      if (!keep) continue;
    }
    out.push_back({e.source, e.id, e.display_name, e.headline, e.last_institution});
  }
  return out;
}

}  // namespace cvlint
