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

// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <httplib.h>
#include <json.hpp>

#include "cvlint/api.hpp"
#include "cvlint/distance.hpp"
#include "cvlint/evaluator.hpp"
#include "cvlint/normalize.hpp"
#include "cvlint/recommend.hpp"
#include "cvlint/snapshot.hpp"
#include "cvlint/synth.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

namespace {

using namespace cvlint;
using Clock = std::chrono::steady_clock;
using nlohmann::json;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Collects failures for one criterion; the first few are echoed.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    if (failures_++ < 5) std::printf("    mismatch: %s\n", what.c_str());
  }
  bool ok() const { return failures_ == 0; }
  std::size_t checks() const { return checks_; }
  std::size_t failures() const { return failures_; }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
};

struct Outcome {
  bool pass = false;
  std::string detail;
};

// Shared state built by the first criterion and reused by later ones.
struct Scenario {
  testing::TempDir dir;
  synth::GeneratedCorpus corpus;
  std::shared_ptr<const CorpusSnapshot> snapshot;
  double ingest_seconds = 0.0;
};

Scenario& scenario() {
  static Scenario s;
  return s;
}

Profile walkthrough() {
  return parse_profile(testing::read_file(testing::data_path("walkthrough_profile.json"))).profile;
}

Profile walkthrough_at(const std::string& school) {
  auto p = walkthrough();
  std::get<Education>(p.sections.at(SectionKind::Education).front()).school_name = school;
  return p;
}

Outcome counts_oracle() {
  const auto t0 = Clock::now();
  auto& sc = scenario();
  sc.corpus = synth::generate(synth::reference_scenario_spec());
  synth::write_corpus(sc.corpus, sc.dir.path());

  const std::vector<std::filesystem::path> files = {sc.dir / "corpus.jsonl"};
  const auto ti = Clock::now();
  sc.snapshot = std::make_shared<const CorpusSnapshot>(ingest_files(files, BuildConfig{}));
  sc.ingest_seconds = seconds_since(ti);

  const auto manifest = json::parse(testing::read_file(sc.dir / "ground_truth.json"));
  const auto scanned = testing::scan_corpus_file(sc.dir / "corpus.jsonl");
  Check c;
  std::size_t pairs = 0;
  for (auto field : kAllFieldKinds) {
    const std::string name(to_string(field));
    const auto& index = sc.snapshot->field_index(field);
    const auto truth = manifest.at("supports").at(name).get<std::map<std::string, std::uint64_t>>();
    const auto& scan = scanned.count(name) ? scanned.at(name) : std::map<std::string, std::uint64_t>{};
    c.expect(truth.size() == index.surfaces().size(), name + " manifest surface count");
    c.expect(scan.size() == index.surfaces().size(), name + " scan surface count");
    for (const auto& [surface, n] : index.surfaces()) {
      ++pairs;
      const auto t = truth.find(surface);
      const auto f = scan.find(surface);
      c.expect(t != truth.end() && t->second == n, name + " manifest: " + surface);
      c.expect(f != scan.end() && f->second == n, name + " scan: " + surface);
    }
    for (const auto& [surface, n] : truth) c.expect(index.support(surface) == n, name + " " + surface);
  }
  c.expect(sc.snapshot->profile_count() == 10000, "profile count");
  const double secs = seconds_since(t0);
  c.expect(secs < 60.0, "runtime");
  std::ostringstream d;
  d << pairs << " (field, surface) pairs exact vs manifest and file scan; " << secs << " s (< 60 s)";
  return {c.ok(), d.str()};
}

Outcome fuzzy_oracle() {
  const auto& s = *scenario().snapshot;
  std::mt19937_64 rng(2024);
  const std::string alphabet = "abcdefghijklmnopqrstuvwxyz ";
  Check c;
  DistanceBudget budget;
  std::size_t queries = 0;
  std::size_t hits = 0;
  for (auto field : kAllFieldKinds) {
    const auto& index = s.field_index(field);
    for (int i = 0; i < 200; ++i) {
      // Mostly perturbed corpus keys, some pure noise.
      std::string q = index.key(static_cast<std::uint32_t>(rng() % index.key_count()));
      const int edits = static_cast<int>(rng() % 4);
      for (int e = 0; e < edits && !q.empty(); ++e) {
        const std::size_t pos = rng() % q.size();
        switch (rng() % 4) {
          case 0: q.erase(pos, 1); break;
          case 1: q.insert(q.begin() + static_cast<long>(pos), alphabet[rng() % alphabet.size()]); break;
          case 2: q[pos] = alphabet[rng() % alphabet.size()]; break;
          default:
            if (pos + 1 < q.size()) std::swap(q[pos], q[pos + 1]);
        }
      }
      if (rng() % 10 == 0) {
        q.clear();
        for (std::size_t n = 2 + rng() % 10; n > 0; --n) q += alphabet[rng() % 26];
      }
      q = normalize(q);
      if (q.empty()) q = "a";
      ++queries;
      for (std::size_t d = 1; d <= 3; ++d) {
        const auto got = fuzzy_candidates(s, field, q, d);
        const auto want = testing::brute_force_fuzzy(index.surfaces(), q, d);
        c.expect(got == want, std::string(to_string(field)) + " '" + q + "' d=" + std::to_string(d));
        if (d == budget(q.size()) && !want.empty()) ++hits;
      }
    }
  }
  std::ostringstream d;
  d << queries << " queries x d in {1,2,3}, set-equal to brute-force scan (" << hits
    << " non-empty at the length budget)";
  return {c.ok(), d.str()};
}

Outcome scenario_queries() {
  const auto& s = *scenario().snapshot;
  const MatchParams p;
  Check c;
  auto surfaces = [](const std::vector<Recommendation>& recs) {
    std::vector<std::string> out;
    for (const auto& r : recs) out.push_back(r.surface);
    return out;
  };
  auto has = [](const std::vector<std::string>& v, const std::string& x) {
    return std::find(v.begin(), v.end(), x) != v.end();
  };
  auto flags = [&](FieldKind f, const std::string& q) {
    return classify_issues(s, f, q, recommend(s, f, q, p), p);
  };

  const auto master = surfaces(recommend(s, FieldKind::DegreeName, "Master", p));
  c.expect(master.size() >= 2 && master[0] == "Master's degree", "Master rank 1");
  c.expect(master.size() >= 2 && master[1] == "Master of Business Administration (MBA)",
           "Master rank 2");

  const auto bsc = surfaces(recommend(s, FieldKind::DegreeName, "Bsc", p));
  c.expect(has(bsc, "Bachelor of Science (BSc)"), "Bsc -> (BSc)");
  c.expect(has(bsc, "Bachelor of Science (B.Sc.)"), "Bsc -> (B.Sc.)");

  const auto ta = surfaces(recommend(s, FieldKind::JobTitle, "Teaching asistant", p));
  c.expect(flags(FieldKind::JobTitle, "Teaching asistant").has(Issue::Spelling), "asistant Spelling");
  c.expect(has(ta, "Teaching Assistant"), "asistant -> Teaching Assistant");

  const auto engr = recommend(s, FieldKind::JobTitle, "software engr", p);
  const auto engr_s = surfaces(engr);
  c.expect(engr_s.size() <= 3 && has(engr_s, "Software Engineer"), "software engr top-3");
  const auto ef = flags(FieldKind::JobTitle, "software engr");
  c.expect(ef.has(Issue::Casing), "software engr Casing");

  const auto raffles = surfaces(recommend(s, FieldKind::SchoolName, "raffles", p));
  c.expect(flags(FieldKind::SchoolName, "raffles").has(Issue::Ambiguity), "raffles Ambiguity");
  c.expect(has(raffles, "Raffles Junior College") && has(raffles, "Raffles Institution"),
           "raffles lists both schools");

  const auto siemens = surfaces(recommend(s, FieldKind::OrganizationName, "siemens", p));
  c.expect(flags(FieldKind::OrganizationName, "siemens").has(Issue::Casing), "siemens Casing");
  c.expect(!siemens.empty() && siemens[0] == "Siemens", "siemens rank 1");

  return {c.ok(), std::to_string(c.checks()) + " rank/flag checks (Master, Bsc, Teaching asistant, "
                  "software engr, raffles, siemens)"};
}

Outcome threshold_bracket() {
  const auto& s = *scenario().snapshot;
  EvalConfig cfg;
  cfg.completeness_threshold = 0.20;
  Check c;
  auto award = [&](const std::string& school) -> const CompletenessRationale* {
    static thread_local EvaluationReport r;
    r = evaluate(s, walkthrough_at(school), cfg);
    for (const auto& sg : r.suggestions) {
      if (sg.kind == SuggestionKind::SectionCompleteness && sg.location.section == SectionKind::Award) {
        return &std::get<CompletenessRationale>(sg.rationale);
      }
    }
    return nullptr;
  };
  const auto* smu = award("Singapore Management University");
  c.expect(smu != nullptr, "25% cohort yields Award suggestion");
  double smu_rate = smu ? smu->rate : -1;
  c.expect(smu && smu_rate == 0.25, "25% cohort rate");
  const auto* sit = award("Singapore Institute of Technology");
  c.expect(sit == nullptr, "15% cohort yields none");
  const auto sit_rate =
      cohort_rate(s, {CohortCriterion::LastSchool, "singapore institute of technology"}, SectionKind::Award);
  c.expect(sit_rate.rate == 0.15, "15% cohort rate");
  std::ostringstream d;
  d << "tau=0.20: rate " << smu_rate << " -> Award suggested; rate " << sit_rate.rate << " -> none";
  return {c.ok(), d.str()};
}

Outcome property_suite() {
  auto& sc = scenario();
  const auto& s = *sc.snapshot;
  Check c;
  std::mt19937_64 rng(99);

  // Threshold and support-floor monotonicity over random configurations.
  std::vector<Profile> profiles = {walkthrough(), walkthrough_at("Singapore Institute of Technology")};
  for (std::size_t i = 0; i < sc.corpus.documents.size(); i += 997) {
    profiles.push_back(parse_profile(sc.corpus.documents[i]).profile);
  }
  auto count = [](const EvaluationReport& r, bool completeness) {
    return static_cast<std::size_t>(std::count_if(r.suggestions.begin(), r.suggestions.end(), [&](const auto& sg) {
      return (sg.kind == SuggestionKind::SectionCompleteness) == completeness;
    }));
  };
  const CohortCriterion criteria[] = {CohortCriterion::LastSchool, CohortCriterion::DegreeLevel,
                                      CohortCriterion::Global};
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::size_t tau_viol = 0;
  std::size_t smin_viol = 0;
  for (int i = 0; i < 100; ++i) {
    EvalConfig lo;
    lo.completeness_threshold = unit(rng);
    lo.cohort_criterion = criteria[rng() % 3];
    lo.match.top_k = 1 + rng() % 5;
    lo.match.min_support = 1 + rng() % 400;
    lo.match.ambiguity_ratio = 1.05 + 4.0 * unit(rng);
    EvalConfig tau_hi = lo;
    tau_hi.completeness_threshold += (1.0 - lo.completeness_threshold) * unit(rng);
    EvalConfig smin_hi = lo;
    smin_hi.match.min_support += 1 + rng() % 400;
    for (const auto& p : profiles) {
      const auto base = evaluate(s, p, lo);
      if (count(evaluate(s, p, tau_hi), true) > count(base, true)) ++tau_viol;
      if (count(evaluate(s, p, smin_hi), false) > count(base, false)) ++smin_viol;
    }
  }
  c.expect(tau_viol == 0, "tau monotonicity: " + std::to_string(tau_viol) + " violations");
  c.expect(smin_viol == 0, "s_min monotonicity: " + std::to_string(smin_viol) + " violations");

  // Normalization idempotence.
  std::size_t norm_bad = 0;
  for (const auto& [surface, n] : s.field_index(FieldKind::JobTitle).surfaces()) {
    const auto k = normalize(surface);
    if (normalize(k) != k) ++norm_bad;
  }
  const std::string noisy = "aZ9 .,'()-&/\t\xE2\x80\x99\xE2\x80\x93";
  for (int i = 0; i < 2000; ++i) {
    std::string x;
    for (std::size_t n = rng() % 20; n > 0; --n) x += noisy[rng() % noisy.size()];
    const auto k = normalize(x);
    if (normalize(k) != k) ++norm_bad;
  }
  c.expect(norm_bad == 0, "normalization idempotence");

  // Metric axioms on 1000 random triples.
  std::size_t metric_bad = 0;
  auto word = [&] {
    std::string w;
    for (std::size_t n = rng() % 12; n > 0; --n) w += "abcde"[rng() % 5];
    return w;
  };
  for (int i = 0; i < 1000; ++i) {
    const auto a = word(), b = word(), x = word();
    if (dl_distance(a, a) != 0 || (dl_distance(a, b) == 0) != (a == b) ||
        dl_distance(a, b) != dl_distance(b, a) ||
        dl_distance(a, x) > dl_distance(a, b) + dl_distance(b, x)) {
      ++metric_bad;
    }
  }
  c.expect(metric_bad == 0, "metric axioms");

  // Parse/serialize round-trip over the whole corpus.
  std::size_t rt_bad = 0;
  for (const auto& doc : sc.corpus.documents) {
    const auto p = parse_profile(doc).profile;
    const auto text = serialize_profile(p);
    if (!(parse_profile(text).profile == p) || serialize_profile(parse_profile(text).profile) != text) {
      ++rt_bad;
    }
  }
  c.expect(rt_bad == 0, "parse/serialize round-trip");

  // Snapshot save/load round-trip.
  save_snapshot(s, sc.dir / "snap.bin");
  const auto loaded = load_snapshot(sc.dir / "snap.bin");
  c.expect(loaded == s, "snapshot save/load equality");
  c.expect(encode_snapshot(loaded) == encode_snapshot(s), "snapshot re-encode bytes");

  // Determinism.
  bool det = true;
  for (const auto& p : profiles) {
    det = det && api::render(to_json(evaluate(s, p, EvalConfig{}))) ==
                     api::render(to_json(evaluate(s, p, EvalConfig{})));
  }
  c.expect(det, "evaluate determinism");

  std::ostringstream d;
  d << "100 configs x " << profiles.size() << " profiles (tau violations " << tau_viol
    << ", s_min violations " << smin_viol << "); idempotence; 1000 metric triples; "
    << sc.corpus.documents.size() << " round-trips; snapshot save/load; determinism";
  return {c.ok(), d.str()};
}

Outcome performance() {
  auto& sc = scenario();
  AppConfig cfg;
  cfg.port = 0;
  cfg.threads = 16;
  cfg.log_level = "error";
  api::Server server(sc.snapshot, cfg);
  const int port = server.bind();
  if (port <= 0) return {false, "could not bind a port"};
  std::thread runner([&] { server.listen(); });
  server.wait_until_ready();

  const std::vector<std::pair<std::string, std::string>> queries = {
      {"DegreeName", "Master"},          {"DegreeName", "Bsc"},
      {"JobTitle", "software engr"},      {"JobTitle", "Teaching asistant"},
      {"SchoolName", "raffles"},          {"OrganizationName", "siemens"},
      {"JobTitle", "Senior Software Engineer"}, {"OrganizationName", "dbs"},
      {"FieldOfStudy", "computer sci"},   {"AwardTitle", "deans list"}};
  constexpr int kClients = 16;
  constexpr int kPerClient = 40;
  std::vector<std::vector<double>> latencies(kClients);
  std::atomic<int> errors{0};
  std::vector<std::thread> clients;
  for (int t = 0; t < kClients; ++t) {
    clients.emplace_back([&, t] {
      httplib::Client cli("127.0.0.1", port);
      cli.set_keep_alive(true);
      for (int i = 0; i < kPerClient; ++i) {
        const auto& [kind, q] = queries[static_cast<std::size_t>(t + i) % queries.size()];
        const auto path = "/api/suggest?kind=" + kind + "&q=" + httplib::detail::encode_query_param(q);
        const auto t0 = Clock::now();
        auto res = cli.Get(path);
        latencies[t].push_back(seconds_since(t0) * 1000.0);
        if (!res || res->status != 200) ++errors;
      }
    });
  }
  for (auto& t : clients) t.join();
  server.stop();
  runner.join();

  std::vector<double> all;
  for (const auto& l : latencies) all.insert(all.end(), l.begin(), l.end());
  std::sort(all.begin(), all.end());
  const double p95 = all[static_cast<std::size_t>(0.95 * static_cast<double>(all.size() - 1))];
  const double p50 = all[all.size() / 2];

  Check c;
  c.expect(sc.ingest_seconds < 10.0, "ingest under 10 s");
  c.expect(p95 < 50.0, "p95 under 50 ms");
  c.expect(errors == 0, "all requests succeeded");
  std::ostringstream d;
  d << "ingest 10k " << sc.ingest_seconds << " s (< 10 s); /api/suggest p50 " << p50 << " ms, p95 " << p95 << " ms (< 50 ms) over "
    << all.size() << " requests from " << kClients << " clients; errors " << errors.load();
  return {c.ok(), d.str()};
}

Outcome golden_walkthrough() {
  const auto& s = *scenario().snapshot;
  const auto report = evaluate(s, walkthrough(), EvalConfig{});
  Check c;
  const auto completeness = report.count(SuggestionKind::SectionCompleteness);
  const auto field = report.suggestions.size() - completeness;
  c.expect(report.suggestions.size() == 7, "7 suggestions");
  c.expect(completeness == 1 && field == 6, "1 completeness + 6 field");
  c.expect(api::render(to_json(report)) ==
               testing::read_file(testing::data_path("walkthrough_report.golden.json")),
           "byte-identical to golden report");
  std::ostringstream d;
  d << report.suggestions.size() << " suggestions (" << completeness << " completeness + " << field
    << " field), golden match " << (c.ok() ? "yes" : "no");
  return {c.ok(), d.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"oracle-equivalence-counts", counts_oracle},
      {"oracle-equivalence-fuzzy", fuzzy_oracle},
      {"scenario-queries", scenario_queries},
      {"completeness-threshold-bracket", threshold_bracket},
      {"property-suite", property_suite},
      {"performance-envelope", performance},
      {"golden-walkthrough", golden_walkthrough},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s  %-32s %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
  return failed == 0 ? 0 : 1;
}
