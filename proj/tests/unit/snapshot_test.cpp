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

#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "cvlint/error.hpp"
#include "cvlint/snapshot.hpp"
#include "fixtures.hpp"

using namespace cvlint;
using cvlint::testing::scenario;
using cvlint::testing::TempDir;

namespace {

std::string doc(const std::string& id, const std::string& first, const std::string& last,
                const std::string& sections, const std::string& source = "PrimaryNetwork") {
  return R"({"id":")" + id + R"(","source":")" + source + R"(","basic":{"first_name":")" + first +
         R"(","last_name":")" + last + R"(","headline":"h"},"sections":{)" + sections + "}}";
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InvalidArgument;
}

std::vector<std::string> small_corpus() {
  return {
      doc("a", "Ann", "Lee",
          R"("Education":[{"school_name":"NUS","degree_name":"BSc","end_year":2010},
                          {"school_name":"SMU","degree_name":"MBA","end_year":2015}],
             "Award":[{"title":"Dean's List"}])"),
      doc("b", "Ann", "Lee", R"("Education":[{"school_name":"NUS","degree_name":"BSc"}])"),
      doc("c", "Bo", "Tan",
          R"("Education":[{"school_name":"SMU","degree_name":"Master of Science","end_year":2019}],
             "Experience":[{"title":"Engineer","organization_name":"  "}])"),
      "{broken",
      doc("a", "Dup", "Licate", ""),
      doc("a", "Ann", "Lee", R"("Skill":[{"name":"Go"}])", "PartnerPlatform"),
      "   ",
  };
}

}  // namespace

TEST_CASE("degree levels and last graduated school") {
  CHECK(degree_level("Master's degree") == "master");
  CHECK(degree_level("Master of Business Administration (MBA)") == "master");
  CHECK(degree_level("Bachelor of Science (B.Sc.)") == "bachelor");
  CHECK(degree_level("Ph.D.") == "doctorate");
  CHECK(degree_level("M.Sc") == "master");
  CHECK(degree_level("A-Levels") == "other");

  Profile p;
  p.sections[SectionKind::Education] = {Education{"Old", "BSc", {}, {}, 2010},
                                        Education{"New", "MSc", {}, {}, 2014},
                                        Education{"Undated", "Cert", {}, {}, {}}};
  CHECK(last_graduated(p)->school_name == "New");
  CHECK(cohort_of(p, CohortCriterion::LastSchool) ==
        CohortKey{CohortCriterion::LastSchool, "new"});
  CHECK(cohort_of(p, CohortCriterion::DegreeLevel) ==
        CohortKey{CohortCriterion::DegreeLevel, "master"});
  CHECK(cohort_of(Profile{}, CohortCriterion::Global) == CohortKey::global());
  CHECK_FALSE(cohort_of(Profile{}, CohortCriterion::LastSchool).has_value());
}

TEST_CASE("ingest counts, failures and duplicates") {
  const auto docs = small_corpus();
  const auto s = ingest(docs, BuildConfig{});
  CHECK(s.profile_count() == 4);
  CHECK(s.ingest_stats().records == 6);  // blank lines are skipped, not records
  CHECK(s.ingest_stats().parse_failures == 2);
  CHECK(support(s, FieldKind::SchoolName, "NUS") == 2);
  CHECK(support(s, FieldKind::DegreeName, "BSc") == 2);
  CHECK(support(s, FieldKind::OrganizationName, "  ") == 0);
  CHECK(support(s, FieldKind::AwardTitle, "Dean's List") == 1);
  CHECK(variants(s, FieldKind::SchoolName, "smu").size() == 1);
  CHECK(s.document(SourceTag::PartnerPlatform, "a") != nullptr);
  CHECK(s.document(SourceTag::PrimaryNetwork, "zzz") == nullptr);

  const auto smu = CohortKey{CohortCriterion::LastSchool, "smu"};
  CHECK(s.cohort_stats().size(smu) == 2);
  CHECK(cohort_rate(s, smu, SectionKind::Award).rate == Catch::Approx(0.5));
  CHECK(cohort_rate(s, CohortKey::global(), SectionKind::Education).rate == Catch::Approx(0.75));
  CHECK(cohort_rate(s, CohortKey::global(), SectionKind::Education).cohort_size == 4);
  CHECK(cohort_rate(s, {CohortCriterion::LastSchool, "nowhere"}, SectionKind::Award).cohort_size ==
        0);
}

TEST_CASE("digest covers documents and build config") {
  const auto docs = small_corpus();
  const auto a = ingest(docs, BuildConfig{});
  const auto b = ingest(docs, BuildConfig{});
  CHECK(a.content_digest() == b.content_digest());
  CHECK(a.digest_hex().size() == 64);

  BuildConfig other;
  other.min_cohort_size = 10;
  CHECK(ingest(docs, other).content_digest() != a.content_digest());

  auto changed = docs;
  changed[0].push_back(' ');
  CHECK(ingest(changed, BuildConfig{}).content_digest() != a.content_digest());
}

TEST_CASE("empty corpus and bad config") {
  const std::vector<std::string> junk = {"{", "[]"};
  CHECK(code_of([&] { ingest(junk, BuildConfig{}); }) == ErrorCode::EmptyCorpus);
  BuildConfig bad;
  bad.trigram_pad = 'x';
  CHECK(code_of([&] { ingest(small_corpus(), bad); }) == ErrorCode::InvalidArgument);
  bad = BuildConfig{};
  bad.min_cohort_size = 0;
  CHECK(code_of([&] { bad.validate(); }) == ErrorCode::InvalidArgument);
  const std::vector<std::filesystem::path> missing = {"/nonexistent/corpus.jsonl"};
  CHECK(code_of([&] { ingest_files(missing, BuildConfig{}); }) == ErrorCode::IoFailure);
}

TEST_CASE("fuzzy candidates validate the distance") {
  const auto s = ingest(small_corpus(), BuildConfig{});
  CHECK(fuzzy_candidates(s, FieldKind::SchoolName, "nsu", 1) == std::vector<std::string>{"nus"});
  CHECK(code_of([&] { fuzzy_candidates(s, FieldKind::SchoolName, "nus", 0); }) ==
        ErrorCode::InvalidArgument);
  CHECK(code_of([&] { fuzzy_candidates(s, FieldKind::SchoolName, "nus", 4); }) ==
        ErrorCode::InvalidArgument);
}

TEST_CASE("name search") {
  const auto s = ingest(small_corpus(), BuildConfig{});
  const auto all = search_profiles(s, "ann", " LEE ");
  REQUIRE(all.size() == 3);
  CHECK(all[0].id == "a");
  CHECK(all[0].source == SourceTag::PrimaryNetwork);
  CHECK(all[0].last_institution == "SMU");
  CHECK(all[1].id == "b");
  CHECK(all[2].source == SourceTag::PartnerPlatform);
  CHECK_FALSE(all[2].last_institution.has_value());
  CHECK(search_profiles(s, "Ann", "Lee", "nus").size() == 1);
  CHECK(search_profiles(s, "Ann", "Lee", "").size() == 3);
  CHECK(search_profiles(s, "Nobody", "Here").empty());
  CHECK(code_of([&] { search_profiles(s, "", "Lee"); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("planted names are found with their institutions") {
  const auto& sc = scenario();
  for (const auto& planted : sc.corpus.truth.names) {
    const auto found = search_profiles(sc.snapshot, planted.first_name, planted.last_name);
    REQUIRE(found.size() == planted.profiles.size());
    for (const auto& pp : planted.profiles) {
      const auto filtered =
          search_profiles(sc.snapshot, planted.first_name, planted.last_name, pp.school);
      const bool listed = std::any_of(filtered.begin(), filtered.end(), [&](const auto& m) {
        return m.id == pp.id && m.source == pp.source && m.last_institution == pp.school;
      });
      CHECK(listed);
    }
  }
  CHECK(search_profiles(sc.snapshot, "Xin Yi", "Tan", "Singapore Management University").size() ==
        2);
}

TEST_CASE("snapshot save and load round-trip") {
  const auto& s = scenario().snapshot;
  TempDir dir;
  save_snapshot(s, dir / "snap.bin");
  const auto loaded = load_snapshot(dir / "snap.bin");
  CHECK(loaded == s);
  CHECK(encode_snapshot(loaded) == encode_snapshot(s));
  CHECK(loaded.field_index(FieldKind::DegreeName).variants("master").size() ==
        s.field_index(FieldKind::DegreeName).variants("master").size());
}

TEST_CASE("corrupted snapshots are rejected") {
  const auto bytes = encode_snapshot(ingest(small_corpus(), BuildConfig{}));
  REQUIRE(decode_snapshot(bytes) == ingest(small_corpus(), BuildConfig{}));

  auto flipped = bytes;
  flipped[bytes.size() - 3] ^= 0x01;
  CHECK(code_of([&] { decode_snapshot(flipped); }) == ErrorCode::DigestMismatch);

  CHECK(code_of([&] { decode_snapshot(bytes.substr(0, bytes.size() - 1)); }) ==
        ErrorCode::DigestMismatch);
  CHECK(code_of([&] { decode_snapshot(bytes.substr(0, 10)); }) == ErrorCode::DigestMismatch);

  auto magic = bytes;
  magic[0] = 'X';
  CHECK(code_of([&] { decode_snapshot(magic); }) == ErrorCode::VersionMismatch);

  auto version = bytes;
  version[8] = 2;
  CHECK(code_of([&] { decode_snapshot(version); }) == ErrorCode::VersionMismatch);

  CHECK(code_of([] { load_snapshot("/nonexistent/snap.bin"); }) == ErrorCode::IoFailure);
}
