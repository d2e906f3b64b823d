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

#include <cstring>
#include <fstream>
#include <iterator>

#include "cvlint/error.hpp"
#include "cvlint/snapshot.hpp"
#include "sha256.hpp"

// File layout:
//   magic "CVLSNAP\0" | u32 format version | 32-byte SHA-256 of payload |
//   u64 payload length | payload
// Integers are little-endian; strings are u64 length + bytes. Derived
// structures (key groups, trigram postings) are rebuilt from the stored
// surface supports on load.

namespace cvlint {

namespace {

constexpr char kMagic[8] = {'C', 'V', 'L', 'S', 'N', 'A', 'P', '\0'};
constexpr std::size_t kHeaderSize = sizeof kMagic + 4 + 32 + 8;

class Writer {
 public:
  void u8(std::uint8_t v) { out_.push_back(static_cast<char>(v)); }
  void u32(std::uint32_t v) {
    for (int i = 0; i < 4; ++i) u8(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void u64(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) u8(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void str(std::string_view s) {
    u64(s.size());
    out_.append(s);
  }
  void bytes(const void* p, std::size_t n) { out_.append(static_cast<const char*>(p), n); }

  std::string take() { return std::move(out_); }

 private:
  std::string out_;
};

class Reader {
 public:
  explicit Reader(std::string_view in) : in_(in) {}

  std::uint8_t u8() {
    need(1);
    return static_cast<std::uint8_t>(in_[pos_++]);
  }
  std::uint32_t u32() {
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(u8()) << (8 * i);
    return v;
  }
  std::uint64_t u64() {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(u8()) << (8 * i);
    return v;
  }
  std::string str() {
    const auto n = u64();
    need(n);
    std::string s(in_.substr(pos_, n));
    pos_ += n;
    return s;
  }
  void bytes(void* p, std::size_t n) {
    need(n);
    std::memcpy(p, in_.data() + pos_, n);
    pos_ += n;
  }
  bool done() const { return pos_ == in_.size(); }

 private:
  void need(std::uint64_t n) const {
    if (n > in_.size() - pos_) throw Error(ErrorCode::DigestMismatch, "snapshot payload truncated");
  }

  std::string_view in_;
  std::size_t pos_ = 0;
};

template <class Enum>
Enum checked_enum(std::uint8_t v, std::size_t count) {
  if (v >= count) throw Error(ErrorCode::DigestMismatch, "snapshot payload has bad enum value");
  return static_cast<Enum>(v);
}

}  // namespace

class SnapshotReader {
 public:
  static CorpusSnapshot read(Reader& r) {
    CorpusSnapshot s;
    s.config_.cohort_criterion = checked_enum<CohortCriterion>(r.u8(), 3);
    s.config_.min_cohort_size = r.u32();
    s.config_.trigram_pad = static_cast<char>(r.u8());
    r.bytes(s.digest_.data(), s.digest_.size());
    s.profile_count_ = r.u64();
    s.stats_.records = r.u64();
    s.stats_.parse_failures = r.u64();
    s.stats_.dropped_instances = r.u64();

    for (auto& field : s.fields_) {
      std::map<std::string, std::uint64_t> supports;
      const auto n = r.u64();
      for (std::uint64_t i = 0; i < n; ++i) {
        auto surface = r.str();
        supports[std::move(surface)] = r.u64();
      }
      field = FrequencyIndex(std::move(supports), s.config_.trigram_pad);
    }

    auto& cohorts = s.cohorts_.mutable_cohorts();
    for (auto n = r.u64(); n > 0; --n) {
      CohortKey key;
      key.criterion = checked_enum<CohortCriterion>(r.u8(), 3);
      key.value = r.str();
      CohortCounts counts;
      counts.size = r.u64();
      for (auto& p : counts.presence) p = r.u64();
      cohorts.emplace(std::move(key), counts);
    }

    for (auto n = r.u64(); n > 0; --n) {
      auto first = r.str();
      auto last = r.str();
      auto& entries = s.names_[{std::move(first), std::move(last)}];
      for (auto m = r.u64(); m > 0; --m) {
        NameEntry e;
        e.source = checked_enum<SourceTag>(r.u8(), 2);
        e.id = r.str();
        e.display_name = r.str();
        e.headline = r.str();
        const bool has_inst = r.u8() != 0;
        auto inst = r.str();
        if (has_inst) e.last_institution = std::move(inst);
        e.last_institution_key = r.str();
        entries.push_back(std::move(e));
      }
    }

    for (auto n = r.u64(); n > 0; --n) {
      auto source = checked_enum<SourceTag>(r.u8(), 2);
      auto id = r.str();
      s.documents_.emplace(std::make_pair(source, std::move(id)), r.str());
    }
    if (!r.done()) throw Error(ErrorCode::DigestMismatch, "trailing bytes in snapshot payload");
    return s;
  }
};

std::string encode_snapshot(const CorpusSnapshot& s) {
  Writer w;
  const auto& cfg = s.build_config();
  w.u8(static_cast<std::uint8_t>(cfg.cohort_criterion));
  w.u32(cfg.min_cohort_size);
  w.u8(static_cast<std::uint8_t>(cfg.trigram_pad));
  w.bytes(s.content_digest().data(), s.content_digest().size());
  w.u64(s.profile_count());
  w.u64(s.ingest_stats().records);
  w.u64(s.ingest_stats().parse_failures);
  w.u64(s.ingest_stats().dropped_instances);

  for (auto field : kAllFieldKinds) {
    const auto& surfaces = s.field_index(field).surfaces();
    w.u64(surfaces.size());
    for (const auto& [surface, count] : surfaces) {
      w.str(surface);
      w.u64(count);
    }
  }

  const auto& cohorts = s.cohort_stats().cohorts();
  w.u64(cohorts.size());
  for (const auto& [key, counts] : cohorts) {
    w.u8(static_cast<std::uint8_t>(key.criterion));
    w.str(key.value);
    w.u64(counts.size);
    for (auto p : counts.presence) w.u64(p);
  }

  w.u64(s.name_index().size());
  for (const auto& [name, entries] : s.name_index()) {
    w.str(name.first);
    w.str(name.second);
    w.u64(entries.size());
    for (const auto& e : entries) {
      w.u8(static_cast<std::uint8_t>(e.source));
      w.str(e.id);
      w.str(e.display_name);
      w.str(e.headline);
      w.u8(e.last_institution ? 1 : 0);
      w.str(e.last_institution.value_or(""));
      w.str(e.last_institution_key);
    }
  }

  w.u64(s.documents().size());
  for (const auto& [key, doc] : s.documents()) {
    w.u8(static_cast<std::uint8_t>(key.first));
    w.str(key.second);
    w.str(doc);
  }
  const auto payload = w.take();

  Writer file;
  file.bytes(kMagic, sizeof kMagic);
  file.u32(kSnapshotFormatVersion);
  const auto checksum = detail::sha256(payload);
  file.bytes(checksum.data(), checksum.size());
  file.u64(payload.size());
  auto out = file.take();
  out.append(payload);
  return out;
}

CorpusSnapshot decode_snapshot(std::string_view bytes) {
  if (bytes.size() < sizeof kMagic || std::memcmp(bytes.data(), kMagic, sizeof kMagic) != 0) {
    throw Error(ErrorCode::VersionMismatch, "not a cvlint snapshot file");
  }
  if (bytes.size() < kHeaderSize) throw Error(ErrorCode::DigestMismatch, "snapshot header truncated");
  Reader header(bytes.substr(sizeof kMagic, kHeaderSize - sizeof kMagic));
  const auto version = header.u32();
  if (version != kSnapshotFormatVersion) {
    throw Error(ErrorCode::VersionMismatch,
                "snapshot format version " + std::to_string(version) + ", expected " +
                    std::to_string(kSnapshotFormatVersion));
  }
  Digest checksum{};
  header.bytes(checksum.data(), checksum.size());
  const auto length = header.u64();
  const auto payload = bytes.substr(kHeaderSize);
  if (payload.size() != length || detail::sha256(payload) != checksum) {
    throw Error(ErrorCode::DigestMismatch, "snapshot checksum mismatch (truncated or corrupt)");
  }
  Reader r(payload);
  return SnapshotReader::read(r);
}

void save_snapshot(const CorpusSnapshot& s, const std::filesystem::path& path) {
  const auto bytes = encode_snapshot(s);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoFailure, "cannot write snapshot " + path.string());
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  out.close();
  if (!out) throw Error(ErrorCode::IoFailure, "write failed for snapshot " + path.string());
}

CorpusSnapshot load_snapshot(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoFailure, "cannot open snapshot " + path.string());
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw Error(ErrorCode::IoFailure, "read error on snapshot " + path.string());
  return decode_snapshot(bytes);
}

}  // namespace cvlint
