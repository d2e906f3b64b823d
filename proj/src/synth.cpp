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

#include "cvlint/synth.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <set>

#include "cvlint/error.hpp"
#include "cvlint/normalize.hpp"

namespace cvlint::synth {

using nlohmann::json;

namespace {

[[noreturn]] void infeasible(const std::string& what) {
  throw Error(ErrorCode::InfeasibleSpec, what);
}

// Library distributions are implementation-defined; these are not, so a seed
// reproduces the same bytes everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % n;
    std::uint64_t v;
    do {
      v = gen_();
    } while (v >= limit);
    return v % n;
  }

  int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

  double unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 gen_;
};

std::uint64_t exact_count(double rate, std::uint64_t size) {
  return static_cast<std::uint64_t>(std::llround(rate * static_cast<double>(size)));
}

bool in_unit(double v) { return v >= 0.0 && v <= 1.0; }

const std::vector<std::string> kSkills = {
    "Python", "Java", "SQL", "Microsoft Excel", "Project Management", "Data Analysis",
    "Leadership", "Public Speaking", "C++", "Machine Learning", "Marketing", "Accounting"};
const std::vector<std::string> kCertifications = {
    "PMP", "AWS Certified Solutions Architect", "CFA Level I", "Google Analytics",
    "Certified Scrum Master", "Chartered Accountant"};
const std::vector<std::string> kVolunteerRoles = {"Mentor", "Tutor", "Coordinator",
                                                  "Event Volunteer"};

constexpr SectionKind kOptionalSections[] = {SectionKind::Experience, SectionKind::Award,
                                             SectionKind::Skill, SectionKind::Certification,
                                             SectionKind::Summary};

struct EduDraft {
  std::string school;
  std::string degree;
  std::optional<std::string> field;
  int start = 0;
  int end = 0;
};

struct ExpDraft {
  std::string title;
  std::string org;
  YearMonth start;
  std::optional<YearMonth> end;
};

struct AwardDraft {
  std::string title;
  int year = 0;
};

struct Draft {
  std::size_t cohort = 0;
  SourceTag source = SourceTag::PrimaryNetwork;
  std::string first_name;
  std::string last_name;
  std::vector<EduDraft> education;
  std::vector<ExpDraft> experience;
  std::vector<AwardDraft> awards;
  std::vector<std::string> skills;
  std::optional<std::string> certification;
  bool summary = false;
  bool other = false;
};

std::optional<std::string> misspell(const std::string& s, Rng& rng) {
  std::vector<std::size_t> letters;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (std::isalpha(static_cast<unsigned char>(s[i]))) letters.push_back(i);
  }
  if (letters.empty()) return std::nullopt;
  const auto pos = letters[rng.below(letters.size())];
  std::string out = s;
  switch (rng.below(3)) {
    case 0:
      out.erase(pos, 1);
      break;
    case 1:
      out.insert(pos, 1, s[pos]);
      break;
    default:
      if (pos + 1 < s.size() && s[pos] != s[pos + 1] &&
          std::isalpha(static_cast<unsigned char>(s[pos + 1]))) {
        std::swap(out[pos], out[pos + 1]);
      } else {
        out.erase(pos, 1);
      }
  }
  return out;
}

std::optional<std::string> lowercase(const std::string& s) {
  std::string out = s;
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (out == s) return std::nullopt;
  return out;
}

// Last word of at least six letters cut to three plus a dot.
std::optional<std::string> abbreviate(const std::string& s) {
  std::size_t end = s.size();
  while (end > 0) {
    auto start = s.rfind(' ', end - 1);
    start = start == std::string::npos ? 0 : start + 1;
    const auto word = std::string_view(s).substr(start, end - start);
    if (word.size() >= 6 && std::all_of(word.begin(), word.end(), [](unsigned char c) {
          return std::isalpha(c) != 0;
        })) {
      return s.substr(0, start) + std::string(word.substr(0, 3)) + "." + s.substr(end);
    }
    if (start == 0) break;
    end = start - 1;
  }
  return std::nullopt;
}

class NoiseTally {
 public:
  void add(FieldKind f, const std::string& surface, const std::string& canonical,
           const std::string& kind) {
    auto& r = records_[{f, surface, canonical, kind}];
    r.field = f;
    r.surface = surface;
    r.canonical = canonical;
    r.kind = kind;
    ++r.count;
  }

  std::vector<NoiseRecord> take() const {
    std::vector<NoiseRecord> out;
    for (const auto& [key, r] : records_) out.push_back(r);
    return out;
  }

 private:
  std::map<std::tuple<FieldKind, std::string, std::string, std::string>, NoiseRecord> records_;
};

void fill(FieldKind field, const std::vector<std::string*>& slots, const FieldPool& pool,
          const NoiseRates& noise, Rng& rng, NoiseTally& tally) {
  std::uint64_t targets = 0;
  for (const auto& t : pool.targets) targets += t.count;
  if (targets > slots.size()) {
    infeasible(std::string(to_string(field)) + " targets need " + std::to_string(targets) +
               " slots but only " + std::to_string(slots.size()) + " exist");
  }
  if (targets < slots.size() && pool.filler.empty()) {
    infeasible(std::string(to_string(field)) + " has unfilled slots and no filler values");
  }

  struct Item {
    const std::string* value;
    const PoolEntry* target;
  };
  std::vector<Item> bag;
  bag.reserve(slots.size());
  for (const auto& t : pool.targets) {
    for (std::uint64_t i = 0; i < t.count; ++i) bag.push_back({&t.surface, &t});
  }
  for (std::size_t j = 0; bag.size() < slots.size(); ++j) {
    bag.push_back({&pool.filler[j % pool.filler.size()], nullptr});
  }
  rng.shuffle(bag);

  for (std::size_t i = 0; i < slots.size(); ++i) {
    const auto& item = bag[i];
    std::string value = *item.value;
    if (item.target) {
      if (item.target->canonical) tally.add(field, value, *item.target->canonical, "planted");
    } else {
      const double u = rng.unit();
      std::optional<std::string> noisy;
      std::string kind;
      if (u < noise.misspelling) {
        noisy = misspell(value, rng);
        kind = "misspelling";
      } else if (u < noise.misspelling + noise.lowercase) {
        noisy = lowercase(value);
        kind = "lowercase";
      } else if (u < noise.misspelling + noise.lowercase + noise.abbreviation) {
        noisy = abbreviate(value);
        kind = "abbreviation";
      }
      if (noisy && *noisy != value) {
        tally.add(field, *noisy, value, kind);
        value = std::move(*noisy);
      }
    }
    *slots[i] = std::move(value);
  }
}

std::string profile_id(SourceTag source, std::size_t index) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%s-%06zu", source == SourceTag::PrimaryNetwork ? "pn" : "pp",
                index + 1);
  return buf;
}

Profile to_profile(const Draft& d, std::size_t index, Rng& rng) {
  Profile p;
  p.id = profile_id(d.source, index);
  p.source = d.source;
  p.basic.first_name = d.first_name;
  p.basic.last_name = d.last_name;
  p.basic.location = "Singapore";
  if (!d.experience.empty()) {
    p.basic.headline = d.experience.front().title + " at " + d.experience.front().org;
  } else {
    p.basic.headline = "Graduate of " + d.education.front().school;
  }

  auto& edu = p.sections[SectionKind::Education];
  for (const auto& e : d.education) {
    edu.emplace_back(Education{e.school, e.degree, e.field, e.start, e.end});
  }
  if (!d.experience.empty()) {
    auto& exp = p.sections[SectionKind::Experience];
    for (const auto& e : d.experience) {
      exp.emplace_back(Experience{e.title, e.org, e.start, e.end, std::nullopt});
    }
  }
  if (!d.awards.empty()) {
    auto& awards = p.sections[SectionKind::Award];
    for (const auto& a : d.awards) {
      awards.emplace_back(Award{a.title, d.education.front().school, a.year});
    }
  }
  if (!d.skills.empty()) {
    auto& skills = p.sections[SectionKind::Skill];
    for (const auto& s : d.skills) skills.emplace_back(Skill{s});
  }
  if (d.certification) {
    p.sections[SectionKind::Certification].emplace_back(
        Certification{*d.certification, std::nullopt, d.education.front().end + 1});
  }
  if (d.summary) {
    std::string text = "Graduate of " + d.education.front().school;
    if (!d.experience.empty()) text += " working as " + d.experience.front().title;
    p.sections[SectionKind::Summary].emplace_back(Summary{text + "."});
  }
  if (d.other) {
    json raw = {{"organization", "Community Chest"},
                {"role", kVolunteerRoles[rng.below(kVolunteerRoles.size())]}};
    p.sections[SectionKind::Other].emplace_back(OtherSection{"Volunteering", raw.dump()});
  }
  return p;
}

}  // namespace

void GeneratorSpec::validate() const {
  if (profile_count == 0) infeasible("profile_count must be positive");
  for (double r : {partner_fraction, prior_education_rate, field_of_study_rate,
                   other_section_rate, noise.misspelling, noise.lowercase, noise.abbreviation}) {
    if (!in_unit(r)) infeasible("rates must lie in [0, 1]");
  }
  if (noise.misspelling + noise.lowercase + noise.abbreviation > 1.0) {
    infeasible("noise rates sum above 1");
  }
  if (max_experiences < 1 || max_awards < 1) infeasible("max_experiences/max_awards must be >= 1");
  if (first_names.empty() || last_names.empty()) infeasible("name pools must be non-empty");

  std::uint64_t total = 0;
  std::set<std::string> schools;
  for (const auto& c : cohorts) {
    if (c.size == 0) infeasible("cohort " + c.school + " is empty");
    if (!schools.insert(normalize(c.school)).second) infeasible("duplicate cohort " + c.school);
    for (const auto& [kind, rate] : c.presence) {
      if (!in_unit(rate)) infeasible("presence rates must lie in [0, 1]");
      if (std::find(std::begin(kOptionalSections), std::end(kOptionalSections), kind) ==
          std::end(kOptionalSections)) {
        infeasible("presence given for unsupported section " + std::string(to_string(kind)));
      }
    }
    total += c.size;
  }
  if (total != profile_count) {
    infeasible("cohort sizes sum to " + std::to_string(total) + ", expected " +
               std::to_string(profile_count));
  }

  for (const auto& [field, pool] : pools) {
    for (const auto& t : pool.targets) {
      if (is_blank(t.surface)) infeasible("blank pool surface");
    }
  }

  std::map<std::string, std::uint64_t> planted_per_school;
  for (const auto& plan : name_plan) {
    if (is_blank(plan.first_name) || is_blank(plan.last_name)) infeasible("blank planted name");
    for (const auto& m : plan.members) ++planted_per_school[normalize(m.school)];
  }
  for (const auto& [school, n] : planted_per_school) {
    auto it = std::find_if(cohorts.begin(), cohorts.end(),
                           [&](const auto& c) { return normalize(c.school) == school; });
    if (it == cohorts.end()) infeasible("planted member school '" + school + "' has no cohort");
    if (n > it->size) infeasible("too many planted members for " + it->school);
  }
}

GeneratedCorpus generate(const GeneratorSpec& spec) {
  spec.validate();
  Rng rng(spec.seed);
  const auto n = static_cast<std::size_t>(spec.profile_count);
  std::vector<Draft> drafts(n);

  // Cohort assignment and exact per-cohort section presence.
  std::vector<std::size_t> order;
  order.reserve(n);
  for (std::size_t c = 0; c < spec.cohorts.size(); ++c) {
    order.insert(order.end(), spec.cohorts[c].size, c);
  }
  rng.shuffle(order);
  std::vector<std::vector<std::size_t>> members(spec.cohorts.size());
  for (std::size_t i = 0; i < n; ++i) {
    drafts[i].cohort = order[i];
    members[order[i]].push_back(i);
  }

  std::vector<std::map<SectionKind, bool>> present(n);
  for (std::size_t c = 0; c < spec.cohorts.size(); ++c) {
    for (auto kind : kOptionalSections) {
      auto it = spec.cohorts[c].presence.find(kind);
      const double rate = it == spec.cohorts[c].presence.end() ? 0.0 : it->second;
      auto pick = members[c];
      rng.shuffle(pick);
      const auto count = exact_count(rate, pick.size());
      for (std::size_t j = 0; j < count; ++j) present[pick[j]][kind] = true;
    }
  }

  std::vector<std::size_t> everyone(n);
  for (std::size_t i = 0; i < n; ++i) everyone[i] = i;
  std::vector<bool> has_prior(n, false);
  {
    auto pick = everyone;
    rng.shuffle(pick);
    const auto count = exact_count(spec.prior_education_rate, n);
    for (std::size_t j = 0; j < count; ++j) has_prior[pick[j]] = true;
  }
  {
    auto pick = everyone;
    rng.shuffle(pick);
    const auto count = exact_count(spec.partner_fraction, n);
    for (std::size_t j = 0; j < count; ++j) drafts[pick[j]].source = SourceTag::PartnerPlatform;
  }

  // Structure: instances and dates. Field values are placeholders until fill().
  for (std::size_t i = 0; i < n; ++i) {
    auto& d = drafts[i];
    d.first_name = spec.first_names[rng.below(spec.first_names.size())];
    d.last_name = spec.last_names[rng.below(spec.last_names.size())];

    EduDraft last;
    last.school = spec.cohorts[d.cohort].school;
    last.end = rng.between(2000, 2023);
    last.start = last.end - rng.between(2, 4);
    d.education.push_back(last);
    if (has_prior[i]) {
      EduDraft prior;
      prior.end = last.start - rng.between(0, 1);
      prior.start = prior.end - rng.between(2, 4);
      d.education.push_back(prior);
    }
    for (auto& e : d.education) {
      if (rng.unit() < spec.field_of_study_rate) e.field = std::string();
    }

    if (present[i][SectionKind::Experience]) {
      const int count = rng.between(1, static_cast<int>(spec.max_experiences));
      int year = last.end;
      std::vector<ExpDraft> jobs;
      for (int k = 0; k < count; ++k) {
        ExpDraft job;
        job.start = YearMonth{year + rng.between(0, 1), rng.between(1, 12)};
        year = job.start.year + rng.between(1, 4);
        if (k + 1 < count || rng.below(2) == 0) job.end = YearMonth{year, rng.between(1, 12)};
        jobs.push_back(job);
      }
      d.experience.assign(jobs.rbegin(), jobs.rend());
    }
    if (present[i][SectionKind::Award]) {
      const int count = rng.between(1, static_cast<int>(spec.max_awards));
      for (int k = 0; k < count; ++k) d.awards.push_back({"", last.end - rng.between(0, 2)});
    }
    if (present[i][SectionKind::Skill]) {
      auto pool = kSkills;
      rng.shuffle(pool);
      d.skills.assign(pool.begin(), pool.begin() + rng.between(1, 4));
    }
    if (present[i][SectionKind::Certification]) {
      d.certification = kCertifications[rng.below(kCertifications.size())];
    }
    d.summary = present[i][SectionKind::Summary];
    d.other = rng.unit() < spec.other_section_rate;
  }

  // Field slots in profile order.
  std::map<FieldKind, std::vector<std::string*>> slots;
  for (auto& d : drafts) {
    for (std::size_t k = 0; k < d.education.size(); ++k) {
      auto& e = d.education[k];
      slots[FieldKind::DegreeName].push_back(&e.degree);
      if (k > 0) slots[FieldKind::SchoolName].push_back(&e.school);
      if (e.field) slots[FieldKind::FieldOfStudy].push_back(&*e.field);
    }
    for (auto& e : d.experience) {
      slots[FieldKind::JobTitle].push_back(&e.title);
      slots[FieldKind::OrganizationName].push_back(&e.org);
    }
    for (auto& a : d.awards) slots[FieldKind::AwardTitle].push_back(&a.title);
  }

  NoiseTally tally;
  static const FieldPool kEmptyPool;
  for (auto field : kAllFieldKinds) {
    auto it = spec.pools.find(field);
    const auto& pool = it == spec.pools.end() ? kEmptyPool : it->second;
    fill(field, slots[field], pool, spec.noise, rng, tally);
  }

  GeneratedCorpus out;
  auto& truth = out.truth;
  truth.seed = spec.seed;
  truth.profile_count = spec.profile_count;

  // Planted names take the next unused members of the named cohorts.
  std::vector<std::size_t> next_member(spec.cohorts.size(), 0);
  for (auto& m : members) rng.shuffle(m);
  std::vector<std::pair<std::size_t, std::size_t>> planted_rows;  // (plan, profile)
  for (std::size_t p = 0; p < spec.name_plan.size(); ++p) {
    for (const auto& member : spec.name_plan[p].members) {
      std::size_t c = 0;
      while (normalize(spec.cohorts[c].school) != normalize(member.school)) ++c;
      const auto index = members[c][next_member[c]++];
      drafts[index].first_name = spec.name_plan[p].first_name;
      drafts[index].last_name = spec.name_plan[p].last_name;
      drafts[index].source = member.source;
      planted_rows.emplace_back(p, index);
    }
  }
  for (const auto& plan : spec.name_plan) truth.names.push_back({plan.first_name, plan.last_name, {}});
  for (const auto& [p, index] : planted_rows) {
    truth.names[p].profiles.push_back({drafts[index].source, profile_id(drafts[index].source, index),
                                       spec.cohorts[drafts[index].cohort].school});
  }

  out.documents.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& d = drafts[i];
    for (const auto& e : d.education) {
      ++truth.supports[FieldKind::SchoolName][e.school];
      ++truth.supports[FieldKind::DegreeName][e.degree];
      if (e.field) ++truth.supports[FieldKind::FieldOfStudy][*e.field];
    }
    for (const auto& e : d.experience) {
      ++truth.supports[FieldKind::JobTitle][e.title];
      ++truth.supports[FieldKind::OrganizationName][e.org];
    }
    for (const auto& a : d.awards) ++truth.supports[FieldKind::AwardTitle][a.title];
    out.documents.push_back(serialize_profile(to_profile(d, i, rng)));
  }

  for (std::size_t c = 0; c < spec.cohorts.size(); ++c) {
    CohortTruth ct;
    ct.school = spec.cohorts[c].school;
    ct.size = spec.cohorts[c].size;
    for (auto kind : kOptionalSections) ct.presence[kind] = 0;
    ct.presence[SectionKind::Education] = ct.size;
    for (auto i : members[c]) {
      for (auto kind : kOptionalSections) {
        if (present[i][kind]) ++ct.presence[kind];
      }
    }
    truth.cohorts.push_back(std::move(ct));
  }
  truth.noise = tally.take();
  return out;
}

GeneratorSpec reference_scenario_spec() {
  GeneratorSpec s;
  s.profile_count = 10000;
  s.seed = 42;
  s.partner_fraction = 0.10;
  s.prior_education_rate = 0.50;
  s.field_of_study_rate = 0.60;
  s.max_experiences = 3;
  s.max_awards = 2;
  s.other_section_rate = 0.02;
  s.noise = {0.004, 0.004, 0.003};

  auto presence = [](double exp, double award, double skill, double cert, double summary) {
    return std::map<SectionKind, double>{{SectionKind::Experience, exp},
                                         {SectionKind::Award, award},
                                         {SectionKind::Skill, skill},
                                         {SectionKind::Certification, cert},
                                         {SectionKind::Summary, summary}};
  };
  s.cohorts = {
      {"National University of Singapore", 3200, presence(0.95, 0.30, 0.80, 0.35, 0.60)},
      {"Nanyang Technological University", 3000, presence(0.95, 0.22, 0.78, 0.30, 0.55)},
      // The threshold bracket: 25% and 15% award presence around a 20% cut.
      {"Singapore Management University", 1000, presence(0.97, 0.25, 0.85, 0.40, 0.65)},
      {"Singapore Institute of Technology", 600, presence(0.92, 0.15, 0.70, 0.25, 0.50)},
      {"Singapore Polytechnic", 800, presence(0.90, 0.10, 0.60, 0.30, 0.40)},
      {"Singapore University of Social Sciences", 700, presence(0.90, 0.12, 0.65, 0.30, 0.45)},
      {"University of London", 700, presence(0.93, 0.18, 0.70, 0.30, 0.55)},
  };

  // Counts are the observed usage numbers scaled down by ten.
  s.pools[FieldKind::DegreeName] = {
      {{"Bachelor's degree", 1500},
       {"Master's degree", 1200},
       {"Master of Business Administration (MBA)", 1100},
       {"Bachelor of Science (BSc)", 900},
       {"Bachelor of Science (B.Sc.)", 800},
       {"Bachelor of Engineering (BEng)", 700},
       {"Bachelor of Business Administration (BBA)", 600},
       {"Master of Science (MSc)", 500},
       {"Doctor of Philosophy (PhD)", 300},
       {"Diploma", 900},
       {"GCE 'A' Levels", 2500},
       {"Master", 150},
       {"Bsc", 40}},
      {"Bachelor of Arts (BA)", "Bachelor of Accountancy", "Bachelor of Laws (LLB)",
       "Master of Engineering (MEng)", "Graduate Diploma", "Bachelor of Computing",
       "Bachelor of Social Sciences", "Higher Nitec", "Master of Public Policy"}};

  s.pools[FieldKind::FieldOfStudy] = {
      {{"Computer Science", 1200},
       {"Business Administration", 1000},
       {"Information Systems", 800},
       {"Accountancy", 700},
       {"Economics", 600},
       {"Electrical and Electronic Engineering", 500},
       {"Mechanical Engineering", 500}},
      {"Finance", "Marketing", "Psychology", "Mathematics", "Law", "Chemical Engineering",
       "Statistics", "Communications"}};

  s.pools[FieldKind::JobTitle] = {
      {{"Software Engineer", 800},
       {"Senior Software Engineer", 400},
       {"Software Engg", 120},
       {"Teaching Assistant", 300},
       {"Teaching asistant", 3, "Teaching Assistant"},
       {"Research Assistant", 500},
       {"Business Analyst", 600},
       {"Data Scientist", 400},
       {"Intern", 900},
       {"Marketing Executive", 500},
       {"Project Manager", 600},
       {"Accountant", 500},
       {"Account Manager", 400}},
      {"Operations Executive", "Sales Manager", "Consultant", "Analyst", "Associate",
       "Assistant Manager", "Customer Service Officer", "Graduate Trainee", "HR Executive",
       "Administrative Officer", "Product Manager", "Financial Analyst"}};

  s.pools[FieldKind::OrganizationName] = {
      {{"Siemens", 500},
       {"siemens", 3},
       {"DBS Bank", 800},
       {"Singapore Management University", 400},
       {"Google", 600},
       {"Shopee", 500},
       {"Grab", 500},
       {"Singtel", 600},
       {"Accenture", 500},
       {"National University of Singapore", 500},
       {"OCBC Bank", 500},
       {"Ministry of Education", 400}},
      {"PwC", "Deloitte", "Micron Technology", "ST Engineering", "Keppel Corporation",
       "Sembcorp Industries", "UOB", "Changi Airport Group", "Lazada", "Sea Limited"}};

  // Earlier-education schools; last schools come from the cohorts above.
  s.pools[FieldKind::SchoolName] = {
      {{"Raffles Junior College", 400},
       {"Raffles Institution", 350},
       {"raffles", 6},
       {"Hwa Chong Institution", 500},
       {"Victoria Junior College", 400},
       {"Anglo-Chinese Junior College", 400},
       {"Temasek Junior College", 350},
       {"Nanyang Junior College", 350},
       {"Ngee Ann Polytechnic", 500},
       {"Temasek Polytechnic", 450},
       {"Republic Polytechnic", 300}},
      {"Catholic Junior College", "Meridian Junior College", "Jurong Junior College",
       "Nanyang Polytechnic", "Serangoon Junior College"}};

  s.pools[FieldKind::AwardTitle] = {
      {{"Dean's List", 800},
       {"Valedictorian", 100},
       {"Best Employee Award", 200},
       {"Scholarship Recipient", 300}},
      {"Hackathon Winner", "Employee of the Month", "Gold Award", "Merit Scholarship",
       "Book Prize"}};

  s.first_names = {"Wei Ming", "Jia Hui", "Jun Jie", "Hui Min", "Zhi Hao", "Siti",
                   "Muhammad", "Nur Aisyah", "Rajesh", "Priya", "Daniel", "Rachel",
                   "Kelvin", "Michelle", "Ravi", "Farhan", "Shu Fen", "Kai Wen",
                   "Yi Ting", "Marcus"};
  s.last_names = {"Tan", "Lim", "Lee",  "Ng",     "Ong",     "Wong",   "Goh",
                  "Chua", "Chan", "Koh", "Teo",   "Ang",     "Yeo",    "Kumar",
                  "Rahman", "Ismail", "Pillai", "Low", "Sim", "Chong"};

  // Planted first names are outside the random pool, so these are the only
  // holders of each name.
  s.name_plan = {
      {"Xin Yi",
       "Tan",
       {{"Singapore Management University", SourceTag::PrimaryNetwork},
        {"Singapore Management University", SourceTag::PrimaryNetwork},
        {"National University of Singapore", SourceTag::PrimaryNetwork},
        {"Nanyang Technological University", SourceTag::PrimaryNetwork},
        {"Singapore Institute of Technology", SourceTag::PrimaryNetwork}}},
      {"Mei Ling",
       "Goh",
       {{"Singapore Management University", SourceTag::PrimaryNetwork},
        {"Singapore Management University", SourceTag::PartnerPlatform}}},
      {"Arjun", "Raman", {{"National University of Singapore", SourceTag::PrimaryNetwork}}},
  };
  return s;
}

json to_json(const GeneratorSpec& spec) {
  json j;
  j["profile_count"] = spec.profile_count;
  j["seed"] = spec.seed;
  j["partner_fraction"] = spec.partner_fraction;
  j["prior_education_rate"] = spec.prior_education_rate;
  j["field_of_study_rate"] = spec.field_of_study_rate;
  j["max_experiences"] = spec.max_experiences;
  j["max_awards"] = spec.max_awards;
  j["other_section_rate"] = spec.other_section_rate;
  j["noise"] = {{"misspelling", spec.noise.misspelling},
                {"lowercase", spec.noise.lowercase},
                {"abbreviation", spec.noise.abbreviation}};
  json pools = json::object();
  for (const auto& [field, pool] : spec.pools) {
    json targets = json::array();
    for (const auto& t : pool.targets) {
      json e = {{"surface", t.surface}, {"count", t.count}};
      if (t.canonical) e["canonical"] = *t.canonical;
      targets.push_back(std::move(e));
    }
    pools[std::string(to_string(field))] = {{"targets", std::move(targets)},
                                            {"filler", pool.filler}};
  }
  j["pools"] = std::move(pools);
  json cohorts = json::array();
  for (const auto& c : spec.cohorts) {
    json presence = json::object();
    for (const auto& [kind, rate] : c.presence) presence[std::string(to_string(kind))] = rate;
    cohorts.push_back({{"school", c.school}, {"size", c.size}, {"presence", std::move(presence)}});
  }
  j["cohorts"] = std::move(cohorts);
  json plans = json::array();
  for (const auto& p : spec.name_plan) {
    json m = json::array();
    for (const auto& member : p.members) {
      m.push_back({{"school", member.school}, {"source", to_string(member.source)}});
    }
    plans.push_back({{"first_name", p.first_name}, {"last_name", p.last_name}, {"members", m}});
  }
  j["name_plan"] = std::move(plans);
  j["first_names"] = spec.first_names;
  j["last_names"] = spec.last_names;
  return j;
}

GeneratorSpec spec_from_json(const json& j) {
  GeneratorSpec s;
  try {
    s.profile_count = j.at("profile_count").get<std::uint64_t>();
    s.seed = j.value("seed", std::uint64_t{42});
    s.partner_fraction = j.value("partner_fraction", 0.0);
    s.prior_education_rate = j.value("prior_education_rate", 0.0);
    s.field_of_study_rate = j.value("field_of_study_rate", 0.0);
    s.max_experiences = j.value("max_experiences", 3u);
    s.max_awards = j.value("max_awards", 2u);
    s.other_section_rate = j.value("other_section_rate", 0.0);
    if (j.contains("noise")) {
      const auto& n = j.at("noise");
      s.noise = {n.value("misspelling", 0.0), n.value("lowercase", 0.0),
                 n.value("abbreviation", 0.0)};
    }
    const json pools = j.value("pools", json::object());
    for (const auto& [name, pool] : pools.items()) {
      auto field = parse_field_kind(name);
      if (!field) infeasible("unknown field kind " + name);
      FieldPool fp;
      const json targets = pool.value("targets", json::array());
      for (const auto& t : targets) {
        PoolEntry e{t.at("surface").get<std::string>(), t.at("count").get<std::uint64_t>(), {}};
        if (t.contains("canonical")) e.canonical = t.at("canonical").get<std::string>();
        fp.targets.push_back(std::move(e));
      }
      fp.filler = pool.value("filler", std::vector<std::string>{});
      s.pools[*field] = std::move(fp);
    }
    for (const auto& c : j.at("cohorts")) {
      CohortPlan plan{c.at("school").get<std::string>(), c.at("size").get<std::uint64_t>(), {}};
      const json presence = c.value("presence", json::object());
      for (const auto& [name, rate] : presence.items()) {
        auto kind = parse_section_kind(name);
        if (!kind) infeasible("unknown section kind " + name);
        plan.presence[*kind] = rate.get<double>();
      }
      s.cohorts.push_back(std::move(plan));
    }
    const json plans = j.value("name_plan", json::array());
    for (const auto& p : plans) {
      NamePlan plan{p.at("first_name").get<std::string>(), p.at("last_name").get<std::string>(), {}};
      for (const auto& m : p.at("members")) {
        auto source = parse_source_tag(m.value("source", std::string("PrimaryNetwork")));
        if (!source) infeasible("unknown source in name plan");
        plan.members.push_back({m.at("school").get<std::string>(), *source});
      }
      s.name_plan.push_back(std::move(plan));
    }
    s.first_names = j.at("first_names").get<std::vector<std::string>>();
    s.last_names = j.at("last_names").get<std::vector<std::string>>();
  } catch (const json::exception& e) {
    infeasible(std::string("generator spec: ") + e.what());
  }
  return s;
}

json to_json(const GroundTruth& truth) {
  json j;
  j["seed"] = truth.seed;
  j["profile_count"] = truth.profile_count;
  json supports = json::object();
  for (const auto& [field, counts] : truth.supports) {
    supports[std::string(to_string(field))] = counts;
  }
  j["supports"] = std::move(supports);
  json cohorts = json::array();
  for (const auto& c : truth.cohorts) {
    json presence = json::object();
    json rates = json::object();
    for (const auto& [kind, count] : c.presence) {
      presence[std::string(to_string(kind))] = count;
      rates[std::string(to_string(kind))] =
          static_cast<double>(count) / static_cast<double>(c.size);
    }
    cohorts.push_back({{"school", c.school},
                       {"key", normalize(c.school)},
                       {"size", c.size},
                       {"presence", std::move(presence)},
                       {"rates", std::move(rates)}});
  }
  j["cohorts"] = std::move(cohorts);
  json noise = json::array();
  for (const auto& n : truth.noise) {
    noise.push_back({{"field", to_string(n.field)},
                     {"surface", n.surface},
                     {"canonical", n.canonical},
                     {"kind", n.kind},
                     {"count", n.count}});
  }
  j["noise"] = std::move(noise);
  json names = json::array();
  for (const auto& n : truth.names) {
    json profiles = json::array();
    for (const auto& p : n.profiles) {
      profiles.push_back({{"source", to_string(p.source)}, {"id", p.id}, {"school", p.school}});
    }
    names.push_back({{"first_name", n.first_name},
                     {"last_name", n.last_name},
                     {"profiles", std::move(profiles)}});
  }
  j["names"] = std::move(names);
  return j;
}

void write_corpus(const GeneratedCorpus& corpus, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::IoFailure, "cannot create " + dir.string() + ": " + ec.message());

  std::ofstream out(dir / "corpus.jsonl", std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoFailure, "cannot write " + (dir / "corpus.jsonl").string());
  for (const auto& doc : corpus.documents) out << doc << '\n';
  out.close();

  std::ofstream truth(dir / "ground_truth.json", std::ios::binary | std::ios::trunc);
  if (!truth) throw Error(ErrorCode::IoFailure, "cannot write ground_truth.json");
  truth << to_json(corpus.truth).dump(2) << '\n';
  truth.close();
  if (!out || !truth) throw Error(ErrorCode::IoFailure, "write failed in " + dir.string());
}

}  // namespace cvlint::synth
