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

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cvlint/profile.hpp"

namespace cvlint::synth {

/// A surface planted with an exact count. `canonical` marks a deliberate
/// misspelling and names its intended form.
struct PoolEntry {
  PoolEntry() = default;
  PoolEntry(std::string surface_, std::uint64_t count_,
            std::optional<std::string> canonical_ = std::nullopt)
      : surface(std::move(surface_)), count(count_), canonical(std::move(canonical_)) {}

  std::string surface;
  std::uint64_t count = 0;
  std::optional<std::string> canonical;
};

/// Exact targets first; remaining slots cycle through `filler`, which is the
/// only part that receives noise.
struct FieldPool {
  std::vector<PoolEntry> targets;
  std::vector<std::string> filler;
};

/// Profiles whose last-graduated school is `school`. `presence` gives the
/// exact fraction of the cohort holding each optional section.
struct CohortPlan {
  std::string school;
  std::uint64_t size = 0;
  std::map<SectionKind, double> presence;
};

struct PlantedMember {
  std::string school;  // must name a cohort
  SourceTag source = SourceTag::PrimaryNetwork;
};

/// People deliberately sharing one name.
struct NamePlan {
  std::string first_name;
  std::string last_name;
  std::vector<PlantedMember> members;
};

struct NoiseRates {
  double misspelling = 0.0;
  double lowercase = 0.0;
  double abbreviation = 0.0;
};

struct GeneratorSpec {
  std::uint64_t profile_count = 0;
  std::uint64_t seed = 42;
  double partner_fraction = 0.0;
  double prior_education_rate = 0.0;  // profiles with one earlier education instance
  double field_of_study_rate = 0.0;   // per education instance
  std::uint32_t max_experiences = 3;
  std::uint32_t max_awards = 2;
  double other_section_rate = 0.0;  // profiles carrying an unmodelled section
  // SchoolName targets fill earlier-education slots; last schools come from
  // the cohort layout.
  std::map<FieldKind, FieldPool> pools;
  NoiseRates noise;
  std::vector<CohortPlan> cohorts;
  std::vector<NamePlan> name_plan;
  std::vector<std::string> first_names;
  std::vector<std::string> last_names;

  /// Throws Error(InfeasibleSpec).
  void validate() const;
};

struct NoiseRecord {
  FieldKind field = FieldKind::DegreeName;
  std::string surface;
  std::string canonical;
  std::string kind;  // "misspelling", "lowercase", "abbreviation", "planted"
  std::uint64_t count = 0;
};

struct CohortTruth {
  std::string school;
  std::uint64_t size = 0;
  std::map<SectionKind, std::uint64_t> presence;
};

struct PlantedProfile {
  SourceTag source = SourceTag::PrimaryNetwork;
  std::string id;
  std::string school;
};

struct PlantedName {
  std::string first_name;
  std::string last_name;
  std::vector<PlantedProfile> profiles;
};

/// What the generator emitted, tallied from its own drafts.
struct GroundTruth {
  std::uint64_t seed = 0;
  std::uint64_t profile_count = 0;
  std::map<FieldKind, std::map<std::string, std::uint64_t>> supports;
  std::vector<CohortTruth> cohorts;
  std::vector<NoiseRecord> noise;
  std::vector<PlantedName> names;
};

struct GeneratedCorpus {
  std::vector<std::string> documents;  // one profile document per entry
  GroundTruth truth;
};

/// Deterministic for a fixed spec (seed included). Throws
/// Error(InfeasibleSpec) when targets exceed the available field slots.
GeneratedCorpus generate(const GeneratorSpec& spec);

/// 10,000 profiles whose planted pools reproduce the suggestion behaviors
/// the tool is built around (specificity, spelling, casing, ambiguity,
/// completeness threshold bracket, two-source search).
GeneratorSpec reference_scenario_spec();

nlohmann::json to_json(const GeneratorSpec& spec);
GeneratorSpec spec_from_json(const nlohmann::json& j);
nlohmann::json to_json(const GroundTruth& truth);

/// Writes `corpus.jsonl` and `ground_truth.json` into `dir`.
void write_corpus(const GeneratedCorpus& corpus, const std::filesystem::path& dir);

}  // namespace cvlint::synth
