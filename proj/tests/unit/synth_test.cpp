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

#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>

#include "cvlint/error.hpp"
#include "cvlint/normalize.hpp"
#include "cvlint/synth.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace cvlint;
using cvlint::testing::scenario;

namespace {

synth::GeneratorSpec small_spec() {
  auto spec = synth::reference_scenario_spec();
  spec.profile_count = 1000;
  for (auto& c : spec.cohorts) c.size /= 10;
  for (auto& [field, pool] : spec.pools) {
    for (auto& t : pool.targets) t.count = (t.count + 9) / 10;
  }
  return spec;
}

ErrorCode code_of(const synth::GeneratorSpec& spec) {
  try {
    synth::generate(spec);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected InfeasibleSpec");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("scenario spec carries the published ratios") {
  const auto spec = synth::reference_scenario_spec();
  CHECK(spec.profile_count == 10000);
  CHECK(spec.seed == 42);
  std::uint64_t masters = 0;
  std::uint64_t mba = 0;
  for (const auto& t : spec.pools.at(FieldKind::DegreeName).targets) {
    if (t.surface == "Master's degree") masters = t.count;
    if (t.surface == "Master of Business Administration (MBA)") mba = t.count;
  }
  // 12,000 and 11,000 users at one tenth scale.
  CHECK(masters == 1200);
  CHECK(mba == 1100);
}

TEST_CASE("generation is deterministic per seed") {
  const auto spec = small_spec();
  const auto a = synth::generate(spec);
  const auto b = synth::generate(spec);
  CHECK(a.documents == b.documents);
  CHECK(synth::to_json(a.truth) == synth::to_json(b.truth));

  auto other = spec;
  other.seed = 43;
  CHECK(synth::generate(other).documents != a.documents);
}

TEST_CASE("documents parse and ids are unique") {
  const auto& corpus = scenario().corpus;
  REQUIRE(corpus.documents.size() == 10000);
  std::set<std::pair<SourceTag, std::string>> ids;
  for (const auto& d : corpus.documents) {
    const auto parsed = parse_profile(d);
    CHECK(parsed.dropped_instances == 0);
    ids.insert({parsed.profile.source, parsed.profile.id});
  }
  CHECK(ids.size() == corpus.documents.size());
}

TEST_CASE("ground truth supports hit every target exactly") {
  const auto spec = synth::reference_scenario_spec();
  const auto& truth = scenario().corpus.truth;
  for (const auto& [field, pool] : spec.pools) {
    for (const auto& t : pool.targets) {
      INFO(to_string(field) << " " << t.surface);
      CHECK(truth.supports.at(field).at(t.surface) == t.count);
    }
  }
  for (const auto& n : truth.noise) {
    INFO(n.surface);
    CHECK(truth.supports.at(n.field).at(n.surface) == n.count);
    CHECK(n.surface != n.canonical);
    if (n.kind == "lowercase") {
      CHECK(normalize(n.surface) == normalize(n.canonical));
    } else {
      CHECK(normalize(n.surface) != normalize(n.canonical));
    }
  }
}

TEST_CASE("ground truth matches an independent scan") {
  const auto& sc = scenario();
  cvlint::testing::TempDir dir;
  synth::write_corpus(sc.corpus, dir.path());
  REQUIRE(std::filesystem::exists(dir / "ground_truth.json"));
  const auto scanned = cvlint::testing::scan_corpus_file(dir / "corpus.jsonl");
  for (auto field : kAllFieldKinds) {
    const auto name = std::string(to_string(field));
    const auto& truth = sc.corpus.truth.supports.at(field);
    const auto it = scanned.find(name);
    REQUIRE(it != scanned.end());
    CHECK(std::map<std::string, std::uint64_t>(truth.begin(), truth.end()) == it->second);
  }
  const auto manifest = nlohmann::json::parse(cvlint::testing::read_file(dir / "ground_truth.json"));
  CHECK(manifest["profile_count"] == 10000);
  CHECK(manifest["seed"] == 42);
}

TEST_CASE("cohort sizes and presence counts are exact") {
  const auto& sc = scenario();
  const auto spec = synth::reference_scenario_spec();
  REQUIRE(sc.corpus.truth.cohorts.size() == spec.cohorts.size());
  for (std::size_t i = 0; i < spec.cohorts.size(); ++i) {
    const auto& plan = spec.cohorts[i];
    const auto& truth = sc.corpus.truth.cohorts[i];
    CHECK(truth.size == plan.size);
    for (const auto& [kind, rate] : plan.presence) {
      CHECK(truth.presence.at(kind) == static_cast<std::uint64_t>(std::llround(rate * plan.size)));
    }
    const CohortKey key{CohortCriterion::LastSchool, normalize(plan.school)};
    CHECK(sc.snapshot.cohort_stats().size(key) == plan.size);
    CHECK(cohort_rate(sc.snapshot, key, SectionKind::Award).rate ==
          Catch::Approx(plan.presence.at(SectionKind::Award)));
  }
}

TEST_CASE("spec JSON round-trip") {
  const auto spec = synth::reference_scenario_spec();
  const auto j = synth::to_json(spec);
  CHECK(synth::to_json(synth::spec_from_json(j)) == j);
  const auto a = synth::generate(small_spec());
  const auto b = synth::generate(synth::spec_from_json(synth::to_json(small_spec())));
  CHECK(a.documents == b.documents);
}

TEST_CASE("infeasible specs are rejected") {
  auto spec = small_spec();
  spec.cohorts.front().size += 1;
  CHECK(code_of(spec) == ErrorCode::InfeasibleSpec);

  spec = small_spec();
  spec.pools[FieldKind::DegreeName].targets.push_back({"Huge", 1'000'000, std::nullopt});
  CHECK(code_of(spec) == ErrorCode::InfeasibleSpec);

  spec = small_spec();
  spec.noise.misspelling = 0.9;
  spec.noise.lowercase = 0.9;
  CHECK(code_of(spec) == ErrorCode::InfeasibleSpec);

  spec = small_spec();
  spec.name_plan.push_back({"A", "B", {{"Nowhere University", SourceTag::PrimaryNetwork}}});
  CHECK(code_of(spec) == ErrorCode::InfeasibleSpec);

  spec = small_spec();
  spec.profile_count = 0;
  CHECK(code_of(spec) == ErrorCode::InfeasibleSpec);

  CHECK_THROWS_AS(synth::spec_from_json(nlohmann::json::parse(R"({"pools":{"Nope":{}}})")), Error);
}
