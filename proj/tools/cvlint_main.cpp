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

// cvlint: build corpus snapshots, evaluate profiles, query suggestions and
// serve the HTTP API.
//
// Exit codes: 0 ok, 1 usage, 2 data error, 3 I/O error.

#include <csignal>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cvlint/api.hpp"
#include "cvlint/app_config.hpp"
#include "cvlint/error.hpp"
#include "cvlint/evaluator.hpp"
#include "cvlint/snapshot.hpp"
#include "cvlint/synth.hpp"

namespace {

using namespace cvlint;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitIo = 3;

int exit_code(ErrorCode code) { return code == ErrorCode::IoFailure ? kExitIo : kExitData; }

std::string read_file(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoFailure, "cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

struct Common {
  std::string config_path;
  std::string snapshot_path;
  std::string format = "text";

  AppConfig load() const {
    AppConfig c = config_path.empty() ? AppConfig{} : load_app_config(config_path);
    if (!snapshot_path.empty()) c.snapshot_path = snapshot_path;
    return c;
  }
};

void add_format(CLI::App* cmd, Common& common) {
  cmd->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"text", "structured"}));
}

api::Server* g_server = nullptr;

void on_signal(int) {
  if (g_server) g_server->stop();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cvlint: corpus-backed resume profile evaluation"};
  app.require_subcommand(1);

  Common common;
  std::string config_help = "Config file (JSON)";

  // ingest
  std::vector<std::string> inputs;
  std::string out_path;
  std::optional<std::uint32_t> min_cohort;
  std::string criterion;
  auto* ingest_cmd = app.add_subcommand("ingest", "Build a snapshot from corpus files");
  ingest_cmd->add_option("--in", inputs, "Newline-delimited profile files")->required();
  ingest_cmd->add_option("--out", out_path, "Snapshot file to write")->required();
  ingest_cmd->add_option("--config", common.config_path, config_help);
  ingest_cmd->add_option("--min-cohort-size", min_cohort, "Cohorts smaller than this fall back to Global");
  ingest_cmd->add_option("--cohort-criterion", criterion, "LastSchool, DegreeLevel or Global")
      ->check(CLI::IsMember({"LastSchool", "DegreeLevel", "Global"}));

  // evaluate
  std::string profile_path;
  std::optional<double> threshold;
  auto* eval_cmd = app.add_subcommand("evaluate", "Evaluate one profile document");
  eval_cmd->add_option("--snapshot", common.snapshot_path, "Snapshot file");
  eval_cmd->add_option("--profile", profile_path, "Profile document file, or - for stdin")->required();
  eval_cmd->add_option("--config", common.config_path, config_help);
  eval_cmd->add_option("--threshold", threshold, "Completeness threshold in [0,1]");
  eval_cmd->add_option("--cohort-criterion", criterion, "LastSchool, DegreeLevel or Global")
      ->check(CLI::IsMember({"LastSchool", "DegreeLevel", "Global"}));
  add_format(eval_cmd, common);

  // suggest
  std::string kind;
  std::string query;
  std::optional<std::size_t> top_k;
  std::optional<std::uint64_t> min_support;
  auto* suggest_cmd = app.add_subcommand("suggest", "Recommend names for one field value");
  suggest_cmd->add_option("--snapshot", common.snapshot_path, "Snapshot file");
  suggest_cmd->add_option("--kind", kind, "Field kind, e.g. DegreeName")->required();
  suggest_cmd->add_option("--q", query, "Field value as entered")->required();
  suggest_cmd->add_option("--config", common.config_path, config_help);
  suggest_cmd->add_option("--top-k", top_k, "Number of recommendations");
  suggest_cmd->add_option("--min-support", min_support, "Support floor");
  add_format(suggest_cmd, common);

  // search
  std::string first;
  std::string last;
  std::optional<std::string> institution;
  auto* search_cmd = app.add_subcommand("search", "Find profiles by name");
  search_cmd->add_option("--snapshot", common.snapshot_path, "Snapshot file");
  search_cmd->add_option("--first", first, "First name")->required();
  search_cmd->add_option("--last", last, "Last name")->required();
  search_cmd->add_option("--institution", institution, "Last graduated institution");
  search_cmd->add_option("--config", common.config_path, config_help);
  add_format(search_cmd, common);

  // gen-corpus
  std::string spec_arg = "paper-scenario";
  std::optional<std::uint64_t> seed;
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand("gen-corpus", "Generate a seeded synthetic corpus");
  gen_cmd->add_option("--spec", spec_arg, "Generator spec file, or paper-scenario");
  gen_cmd->add_option("--seed", seed, "Override the spec seed");
  gen_cmd->add_option("--out", gen_out, "Output directory")->required();

  // serve
  std::optional<int> port;
  std::optional<std::string> host;
  auto* serve_cmd = app.add_subcommand("serve", "Serve the HTTP API over a snapshot");
  serve_cmd->add_option("--config", common.config_path, config_help);
  serve_cmd->add_option("--snapshot", common.snapshot_path, "Snapshot file");
  serve_cmd->add_option("--port", port, "Listen port (0 picks one)");
  serve_cmd->add_option("--host", host, "Listen address");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*ingest_cmd) {
      auto cfg = common.load();
      if (min_cohort) cfg.build.min_cohort_size = *min_cohort;
      if (!criterion.empty()) cfg.build.cohort_criterion = *parse_cohort_criterion(criterion);
      std::vector<std::filesystem::path> files(inputs.begin(), inputs.end());
      const auto snapshot = ingest_files(files, cfg.build);
      save_snapshot(snapshot, out_path);
      const auto& st = snapshot.ingest_stats();
      std::cout << "profiles: " << snapshot.profile_count() << "\n"
                << "records: " << st.records << "\n"
                << "parse_failures: " << st.parse_failures << "\n"
                << "dropped_instances: " << st.dropped_instances << "\n"
                << "digest: " << snapshot.digest_hex() << "\n";
      return kExitOk;
    }

    if (*gen_cmd) {
      auto spec = spec_arg == "paper-scenario"
                      ? synth::reference_scenario_spec()
                      : synth::spec_from_json(nlohmann::json::parse(read_file(spec_arg)));
      if (seed) spec.seed = *seed;
      const auto corpus = synth::generate(spec);
      synth::write_corpus(corpus, gen_out);
      std::cout << "profiles: " << corpus.documents.size() << "\n"
                << "corpus: " << (std::filesystem::path(gen_out) / "corpus.jsonl").string() << "\n"
                << "ground_truth: "
                << (std::filesystem::path(gen_out) / "ground_truth.json").string() << "\n";
      return kExitOk;
    }

    auto cfg = common.load();
    if (cfg.snapshot_path.empty()) {
      std::cerr << "error: --snapshot or a config with \"snapshot\" is required\n";
      return kExitUsage;
    }

    if (*serve_cmd) {
      if (port) cfg.port = *port;
      if (host) cfg.host = *host;
      auto snapshot = std::make_shared<const CorpusSnapshot>(load_snapshot(cfg.snapshot_path));
      api::Server server(snapshot, cfg);
      const int bound = server.bind();
      if (bound < 0) {
        std::cerr << "error: cannot bind " << cfg.host << ":" << cfg.port << "\n";
        return kExitIo;
      }
      g_server = &server;
      std::signal(SIGINT, on_signal);
      std::signal(SIGTERM, on_signal);
      std::cout << "listening on http://" << cfg.host << ":" << bound << " ("
                << snapshot->profile_count() << " profiles)" << std::endl;
      server.listen();
      g_server = nullptr;
      return kExitOk;
    }

    const auto snapshot = load_snapshot(cfg.snapshot_path);

    if (*eval_cmd) {
      if (threshold) cfg.eval.completeness_threshold = *threshold;
      if (!criterion.empty()) cfg.eval.cohort_criterion = parse_cohort_criterion(criterion);
      const auto parsed = parse_profile(read_file(profile_path));
      const auto report = evaluate(snapshot, parsed.profile, cfg.eval);
      std::cout << (common.format == "structured" ? api::render(to_json(report))
                                                  : render_text(report));
      return kExitOk;
    }

    if (*suggest_cmd) {
      auto field = parse_field_kind(kind);
      if (!field) {
        std::cerr << "error: unknown --kind " << kind << "\n";
        return kExitUsage;
      }
      if (top_k) cfg.eval.match.top_k = *top_k;
      if (min_support) cfg.eval.match.min_support = *min_support;
      cfg.eval.match.validate();
      const auto doc = api::suggest_json(snapshot, *field, query, cfg.eval.match);
      std::cout << (common.format == "structured" ? api::render(doc)
                                                  : api::render_suggest_text(doc));
      return kExitOk;
    }

    if (*search_cmd) {
      std::optional<std::string_view> inst;
      if (institution && !institution->empty()) inst = *institution;
      const auto doc = api::search_json(snapshot, first, last, inst);
      std::cout << (common.format == "structured" ? api::render(doc)
                                                  : api::render_search_text(doc));
      return kExitOk;
    }
  } catch (const Error& e) {
    std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error [MalformedDocument]: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}
