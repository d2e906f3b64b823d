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

#include "cvlint/evaluator.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <tuple>

#include "cvlint/error.hpp"
#include "cvlint/normalize.hpp"

namespace cvlint {

using nlohmann::json;

namespace {

bool location_less(const Suggestion& a, const Suggestion& b) {
  // Section-level findings (no instance) sort ahead of instance findings.
  auto key = [](const Suggestion& s) {
    const long instance = s.location.instance ? static_cast<long>(*s.location.instance) : -1L;
    const int field = s.location.field ? static_cast<int>(*s.location.field) : -1;
    return std::make_tuple(static_cast<int>(s.location.section), instance,
                           static_cast<int>(s.kind), field);
  };
  return key(a) < key(b);
}

void invalid(const std::string& what) { throw Error(ErrorCode::InvalidArgument, what); }

json location_json(const Location& l) {
  json j;
  j["section"] = to_string(l.section);
  if (l.instance) j["instance"] = *l.instance;
  if (l.field) j["field"] = to_string(*l.field);
  return j;
}

std::string percent(double rate) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f%%", rate * 100.0);
  return buf;
}

}  // namespace

std::string_view to_string(SuggestionKind k) {
  switch (k) {
    case SuggestionKind::SectionCompleteness: return "SectionCompleteness";
    case SuggestionKind::Specificity: return "Specificity";
    case SuggestionKind::Spelling: return "Spelling";
    case SuggestionKind::Casing: return "Casing";
    case SuggestionKind::Ambiguity: return "Ambiguity";
  }
  return "SectionCompleteness";
}

void EvalConfig::validate() const {
  if (!(completeness_threshold >= 0.0 && completeness_threshold <= 1.0)) {
    invalid("completeness_threshold must be in [0, 1]");
  }
  match.validate();
}

SuggestionKind precedence_kind(const IssueFlags& flags) {
  if (flags.has(Issue::Spelling)) return SuggestionKind::Spelling;
  if (flags.has(Issue::Casing)) return SuggestionKind::Casing;
  if (flags.has(Issue::Ambiguity)) return SuggestionKind::Ambiguity;
  return SuggestionKind::Specificity;
}

std::vector<Suggestion> completeness_suggestions(const CorpusSnapshot& s, const Profile& p,
                                                 const EvalConfig& c) {
  const auto criterion = c.cohort_criterion.value_or(s.build_config().cohort_criterion);
  auto cohort = cohort_of(p, criterion);
  const bool fallback =
      !cohort || s.cohort_stats().size(*cohort) < s.build_config().min_cohort_size;
  if (fallback) cohort = CohortKey::global();

  std::vector<Suggestion> out;
  for (auto kind : c.checked_sections) {
    if (section_present(p, kind)) continue;
    const auto r = cohort_rate(s, *cohort, kind);
    if (r.cohort_size == 0 || r.rate < c.completeness_threshold) continue;
    Suggestion sg;
    sg.kind = SuggestionKind::SectionCompleteness;
    sg.location = {kind, std::nullopt, std::nullopt};
    sg.rationale = CompletenessRationale{*cohort, fallback, r.rate, r.cohort_size,
                                         c.completeness_threshold};
    out.push_back(std::move(sg));
  }
  return out;
}

std::vector<Suggestion> field_suggestions(const CorpusSnapshot& s, const Profile& p,
                                          const EvalConfig& c) {
  std::vector<Suggestion> out;
  for (const auto& [kind, list] : p.sections) {
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (auto field : fields_of(kind)) {
        const auto value = field_value(list[i], field);
        if (!value || is_blank(*value) || normalize(*value).empty()) continue;
        auto recs = recommend(s, field, *value, c.match);
        if (recs.empty()) continue;
        const auto flags = classify_issues(s, field, *value, recs, c.match);
        if (flags.empty()) continue;

        Suggestion sg;
        sg.kind = precedence_kind(flags);
        sg.location = {kind, i, field};
        sg.original = std::string(*value);
        sg.recommendations = std::move(recs);
        sg.rationale = FieldRationale{flags, support(s, field, *value),
                                      s.field_index(field).key_support(normalize(*value))};
        out.push_back(std::move(sg));
      }
    }
  }
  return out;
}

EvaluationReport evaluate(const CorpusSnapshot& s, const Profile& p, const EvalConfig& c) {
  c.validate();
  EvaluationReport report;
  report.config = c;
  report.config.cohort_criterion = c.cohort_criterion.value_or(s.build_config().cohort_criterion);
  report.snapshot_digest = s.digest_hex();
  if (const auto* doc = s.document(p.source, p.id); doc && *doc == serialize_profile(p)) {
    report.profile = ProfileRef{p.source, p.id};
  }

  report.suggestions = completeness_suggestions(s, p, report.config);
  auto fields = field_suggestions(s, p, report.config);
  report.suggestions.insert(report.suggestions.end(), std::make_move_iterator(fields.begin()),
                            std::make_move_iterator(fields.end()));
  std::stable_sort(report.suggestions.begin(), report.suggestions.end(), location_less);
  for (const auto& sg : report.suggestions) ++report.summary[static_cast<std::size_t>(sg.kind)];
  return report;
}

json to_json(const MatchParams& p) {
  json j;
  j["top_k"] = p.top_k;
  j["min_support"] = p.min_support;
  j["ambiguity_ratio"] = p.ambiguity_ratio;
  j["spelling_ratio"] = p.spelling_ratio;
  j["distance_budget"] = {{"short_max_len", p.budget.short_max_len},
                          {"medium_max_len", p.budget.medium_max_len}};
  j["casing_stopwords"] = p.casing_stopwords;
  return j;
}

void merge_json(const json& j, MatchParams& into) {
  if (!j.is_object()) invalid("match params must be an object");
  try {
    if (j.contains("top_k")) into.top_k = j.at("top_k").get<std::size_t>();
    if (j.contains("min_support")) into.min_support = j.at("min_support").get<std::uint64_t>();
    if (j.contains("ambiguity_ratio")) into.ambiguity_ratio = j.at("ambiguity_ratio").get<double>();
    if (j.contains("spelling_ratio")) into.spelling_ratio = j.at("spelling_ratio").get<double>();
    if (j.contains("distance_budget")) {
      const auto& b = j.at("distance_budget");
      if (b.contains("short_max_len")) into.budget.short_max_len = b.at("short_max_len").get<std::size_t>();
      if (b.contains("medium_max_len")) into.budget.medium_max_len = b.at("medium_max_len").get<std::size_t>();
    }
    if (j.contains("casing_stopwords")) {
      into.casing_stopwords = j.at("casing_stopwords").get<std::vector<std::string>>();
    }
  } catch (const json::exception& e) {
    invalid(std::string("match params: ") + e.what());
  }
  into.validate();
}

json to_json(const EvalConfig& c) {
  json j;
  j["completeness_threshold"] = c.completeness_threshold;
  if (c.cohort_criterion) {
    j["cohort_criterion"] = to_string(*c.cohort_criterion);
  } else {
    j["cohort_criterion"] = nullptr;
  }
  json kinds = json::array();
  for (auto k : c.checked_sections) kinds.push_back(to_string(k));
  j["checked_sections"] = std::move(kinds);
  j["match"] = to_json(c.match);
  return j;
}

void merge_json(const json& j, EvalConfig& into) {
  if (!j.is_object()) invalid("eval config must be an object");
  try {
    if (j.contains("completeness_threshold")) {
      into.completeness_threshold = j.at("completeness_threshold").get<double>();
    }
    if (j.contains("cohort_criterion")) {
      const auto& v = j.at("cohort_criterion");
      if (v.is_null()) {
        into.cohort_criterion.reset();
      } else {
        auto c = parse_cohort_criterion(v.get<std::string>());
        if (!c) invalid("unknown cohort_criterion " + v.dump());
        into.cohort_criterion = c;
      }
    }
    if (j.contains("checked_sections")) {
      into.checked_sections.clear();
      for (const auto& name : j.at("checked_sections")) {
        auto k = parse_section_kind(name.get<std::string>());
        if (!k) invalid("unknown section kind " + name.dump());
        into.checked_sections.insert(*k);
      }
    }
    if (j.contains("match")) merge_json(j.at("match"), into.match);
  } catch (const json::exception& e) {
    invalid(std::string("eval config: ") + e.what());
  }
  into.validate();
}

json to_json(const Recommendation& r) {
  return {{"surface", r.surface},
          {"support", r.support},
          {"match_class", to_string(r.match_class)},
          {"distance", r.distance}};
}

json to_json(const EvaluationReport& r) {
  json j;
  j["schema_version"] = kProfileSchemaVersion;
  if (r.profile) {
    j["profile"] = {{"source", to_string(r.profile->source)}, {"id", r.profile->id}};
  } else {
    j["profile"] = "ad-hoc";
  }
  j["snapshot_digest"] = r.snapshot_digest;
  j["config"] = to_json(r.config);

  json summary = json::object();
  for (auto k : kAllSuggestionKinds) summary[std::string(to_string(k))] = r.count(k);
  j["summary"] = std::move(summary);
  j["total"] = r.suggestions.size();

  json list = json::array();
  for (const auto& sg : r.suggestions) {
    json item;
    item["kind"] = to_string(sg.kind);
    item["location"] = location_json(sg.location);
    item["original"] = sg.original;
    json recs = json::array();
    for (const auto& rec : sg.recommendations) recs.push_back(to_json(rec));
    item["recommendations"] = std::move(recs);
    if (const auto* c = std::get_if<CompletenessRationale>(&sg.rationale)) {
      item["rationale"] = {
          {"cohort", {{"criterion", to_string(c->cohort.criterion)}, {"value", c->cohort.value}}},
          {"fell_back_to_global", c->fell_back_to_global},
          {"rate", c->rate},
          {"cohort_size", c->cohort_size},
          {"threshold", c->threshold}};
    } else {
      const auto& f = std::get<FieldRationale>(sg.rationale);
      json flags = json::array();
      for (auto i : f.flags.list()) flags.push_back(to_string(i));
      item["rationale"] = {{"flags", std::move(flags)},
                           {"query_support", f.query_support},
                           {"query_key_support", f.query_key_support}};
    }
    list.push_back(std::move(item));
  }
  j["suggestions"] = std::move(list);
  return j;
}

std::string render_text(const EvaluationReport& r) {
  std::ostringstream out;
  out << "profile: ";
  if (r.profile) {
    out << to_string(r.profile->source) << "/" << r.profile->id << "\n";
  } else {
    out << "ad-hoc\n";
  }
  out << "snapshot: " << r.snapshot_digest.substr(0, 16) << "\n";
  out << r.suggestions.size() << " suggestion" << (r.suggestions.size() == 1 ? "" : "s");
  bool first = true;
  for (auto k : kAllSuggestionKinds) {
    if (r.count(k) == 0) continue;
    out << (first ? ": " : ", ") << r.count(k) << " " << to_string(k);
    first = false;
  }
  out << "\n";

  std::size_t n = 0;
  for (const auto& sg : r.suggestions) {
    out << "\n[" << ++n << "] " << to_string(sg.kind) << "  " << to_string(sg.location.section);
    if (sg.location.instance) out << "[" << *sg.location.instance << "]";
    if (sg.location.field) out << "." << to_string(*sg.location.field);
    if (!sg.original.empty()) out << "  \"" << sg.original << "\"";
    out << "\n";
    if (const auto* c = std::get_if<CompletenessRationale>(&sg.rationale)) {
      out << "    " << percent(c->rate) << " of " << c->cohort_size << " profiles in cohort "
          << to_string(c->cohort.criterion);
      if (!c->cohort.value.empty()) out << "=" << c->cohort.value;
      if (c->fell_back_to_global) out << " (fallback)";
      out << " list this section (threshold " << percent(c->threshold) << ")\n";
    }
    for (std::size_t i = 0; i < sg.recommendations.size(); ++i) {
      const auto& rec = sg.recommendations[i];
      out << "    " << i + 1 << ". " << rec.surface << "  (" << rec.support << ", "
          << to_string(rec.match_class) << ")\n";
    }
  }
  return out.str();
}

}  // namespace cvlint
