#pragma once

// Command-line front end: `calibrate`, `evaluate`, `lexicon validate` and
// `fixture`. Everything writes to caller-supplied streams so the commands
// can run in-process.
//
// Exit codes: 0 ok, 2 I/O error, 3 malformed input, 4 bad configuration.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "pronounflow/conllu.hpp"
#include "pronounflow/error.hpp"
#include "pronounflow/evaluation.hpp"
#include "pronounflow/fillmask.hpp"
#include "pronounflow/io.hpp"
#include "pronounflow/lexicon.hpp"
#include "pronounflow/matcher.hpp"
#include "pronounflow/remote_backend.hpp"
#include "pronounflow/report_json.hpp"
#include "pronounflow/winventor.hpp"

namespace pronounflow::cli {

inline constexpr std::string_view kVersion = "0.1.0";

enum ExitCode : int { kOk = 0, kIoError = 2, kFormatError = 3, kConfigError = 4 };

struct RunConfig {
  AgreementMode mode = AgreementMode::austere;
  int top_k = 2;
  BackendKind backend = BackendKind::baseline;
  std::optional<std::string> backend_url;
  std::optional<std::string> fixtures;
  std::optional<std::string> gender_nouns;
  std::optional<std::string> neopronouns;
  std::optional<std::string> indicating_verbs;
  std::optional<std::string> given_names;
  std::optional<std::string> indicator_weights;
  double no_match_penalty = kDefaultNoMatchPenalty;
  double model_weight = 1.0;
  bool symbolic_first = true;
  bool explain = false;
  int results_per_sentence = 1;
  unsigned workers = 1;
  int max_in_flight = 4;
  int timeout_ms = 5000;

  void validate() const {
    if (top_k < 1) throw ConfigError("top-k must be at least 1");
    if (results_per_sentence < 1) throw ConfigError("results-per-sentence must be at least 1");
    if (workers < 1) throw ConfigError("workers must be at least 1");
    if (max_in_flight < 1) throw ConfigError("max-in-flight must be at least 1");
    if (timeout_ms < 1) throw ConfigError("timeout must be positive");
    if (backend == BackendKind::remote && (!backend_url || backend_url->empty())) {
      throw ConfigError("the remote backend needs --backend-url (or PRONOUNFLOW_BACKEND_URL)");
    }
    if (backend == BackendKind::fixture && (!fixtures || fixtures->empty())) {
      throw ConfigError("the fixture backend needs --fixtures");
    }
  }

  nlohmann::ordered_json to_json() const {
    auto opt = [](const std::optional<std::string>& v) { return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(); };
    nlohmann::ordered_json j;
    j["mode"] = to_string(mode);
    j["top_k"] = top_k;
    j["backend"] = to_string(backend);
    j["backend_url"] = opt(backend_url);
    j["fixtures"] = opt(fixtures);
    j["gender_nouns"] = opt(gender_nouns);
    j["neopronouns"] = opt(neopronouns);
    j["indicating_verbs"] = opt(indicating_verbs);
    j["given_names"] = opt(given_names);
    j["indicator_weights"] = opt(indicator_weights);
    j["no_match_penalty"] = no_match_penalty;
    j["model_weight"] = model_weight;
    j["symbolic_first"] = symbolic_first;
    j["explain"] = explain;
    j["results_per_sentence"] = results_per_sentence;
    return j;
  }
};

inline Lexicons load_lexicons(const RunConfig& cfg) {
  Lexicons lex = Lexicons::builtin();
  if (cfg.gender_nouns) lex.genders = GenderLexicon::from_tsv(read_file(*cfg.gender_nouns), *cfg.gender_nouns);
  if (cfg.neopronouns) lex.neopronouns = PronounTable::from_tsv(read_file(*cfg.neopronouns), true);
  if (cfg.indicating_verbs) lex.indicating_verbs = IndicatingVerbList::from_lines(read_file(*cfg.indicating_verbs));
  if (cfg.given_names) lex.names = Gazetteer::from_tsv(read_file(*cfg.given_names));
  return lex;
}

inline std::unique_ptr<FillMaskBackend> make_backend(const RunConfig& cfg) {
  switch (cfg.backend) {
    case BackendKind::fixture: {
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(read_file(*cfg.fixtures));
      } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("fixture file is not JSON: ") + e.what());
      }
      return std::make_unique<FixtureBackend>(FixtureBackend::from_json(j));
    }
    case BackendKind::remote: {
      RemoteBackend::Options o;
      o.url = *cfg.backend_url;
      o.max_in_flight = cfg.max_in_flight;
      o.timeout = std::chrono::milliseconds(cfg.timeout_ms);
      return std::make_unique<RemoteBackend>(std::move(o));
    }
    case BackendKind::baseline:
      return std::make_unique<BaselineBackend>();
  }
  throw ConfigError("unknown backend");
}

inline WinventorOptions winventor_options(const RunConfig& cfg) {
  WinventorOptions w;
  w.mode = cfg.mode;
  w.no_match_penalty = cfg.no_match_penalty;
  if (cfg.indicator_weights) w.weights = IndicatorWeights::from_key_values(read_file(*cfg.indicator_weights));
  return w;
}

inline MatcherConfig matcher_config(const RunConfig& cfg) {
  MatcherConfig m;
  m.no_match_penalty = cfg.no_match_penalty;
  m.model_weight = cfg.model_weight;
  m.symbolic_first = cfg.symbolic_first;
  m.top_k = cfg.top_k;
  m.results_per_sentence = cfg.results_per_sentence;
  return m;
}

// Remote backends are named by URL so that writing the header never
// touches the network.
inline std::string backend_name(const RunConfig& cfg, const FillMaskBackend& backend) {
  if (cfg.backend == BackendKind::remote) return "remote:" + *cfg.backend_url;
  return backend.descriptor().name;
}

// Loads everything a command needs, translating failures into exit codes.
struct Session {
  Lexicons lexicons;
  std::unique_ptr<FillMaskBackend> backend;
  std::optional<Pipeline> pipeline;

  explicit Session(const RunConfig& cfg) : lexicons(load_lexicons(cfg)), backend(make_backend(cfg)) {
    pipeline.emplace(Pipeline{lexicons, *backend, winventor_options(cfg), matcher_config(cfg)});
  }
};

template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kFormatError;
  } catch (const StructureError& e) {
    err << "error: " << e.what() << '\n';
    return kFormatError;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }
}

// Runs `body` against `path` when given, otherwise against `fallback`.
template <typename Body>
void with_output(const std::optional<std::string>& path, std::ostream& fallback, Body&& body) {
  if (!path) {
    body(fallback);
    return;
  }
  std::ofstream file(*path, std::ios::binary);
  if (!file) throw IoError("cannot open " + *path + " for writing");
  body(file);
  if (!file) throw IoError("cannot write " + *path);
}

inline int cmd_calibrate(const std::vector<std::string>& inputs, const RunConfig& cfg,
                         const std::optional<std::string>& output, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    cfg.validate();
    Session session(cfg);
    std::vector<Document> docs;
    for (const auto& path : inputs) {
      try {
        docs.push_back(load_conllu_file(path, session.lexicons));
      } catch (const FormatError& e) {
        throw FormatError(path + ": " + e.what());
      } catch (const StructureError& e) {
        throw FormatError(path + ": " + e.what());
      }
    }
    int processed = 0, calibrated = 0, no_pronouns = 0, rejected = 0, failed = 0;
    with_output(output, out, [&](std::ostream& sink) {
      nlohmann::ordered_json header;
      header["record"] = "config";
      header["version"] = kVersion;
      header["backend_name"] = backend_name(cfg, *session.backend);
      header["config"] = cfg.to_json();
      sink << header.dump() << '\n';
      for (const auto& doc : docs) {
        auto reports = calibrate_document(doc, *session.pipeline, cfg.workers);
        for (std::size_t i = 0; i < reports.size(); ++i) {
          const auto& r = reports[i];
          ++processed;
          if (!r.skipped_reason) {
            ++calibrated;
          } else if (*r.skipped_reason == SkipReason::no_pronouns) {
            ++no_pronouns;
          } else if (*r.skipped_reason == SkipReason::rejected_unsupported) {
            ++rejected;
          } else {
            ++failed;
          }
          sink << to_json(r, doc.sentences[i], cfg.explain).dump() << '\n';
        }
      }
    });
    err << "processed " << processed << " sentence(s): " << calibrated << " calibrated, "
        << (no_pronouns + rejected + failed) << " skipped (" << no_pronouns << " no-pronouns, " << rejected
        << " rejected-unsupported, " << failed << " backend-failed)\n";
    return kOk;
  });
}

inline std::string format_table(const ReplicationResult& r) {
  std::ostringstream t;
  t << std::fixed << std::setprecision(3);
  t << "sentences            " << r.total << '\n'
    << "parsed               " << r.parsed << '\n'
    << "rejected             " << r.rejected << '\n'
    << "hits                 " << r.hits << '\n'
    << "accuracy             " << r.accuracy << '\n'
    << "avg sentence length  " << r.avg_sentence_length << '\n'
    << "avg pronouns         " << r.avg_pronouns << '\n'
    << "winventor-based      " << r.winventor_share << '\n'
    << "model-based          " << r.model_share << '\n';
  if (r.undefined_rates) t << "(no sentence was parsed; rates are undefined)\n";
  return t.str();
}

inline std::string format_table(const std::vector<NeopronounOutcome>& outcomes) {
  std::ostringstream t;
  int matches = 0;
  for (const auto& o : outcomes) {
    matches += o.match ? 1 : 0;
    t << (o.match ? "ok    " : "DIFF  ") << o.input << "\n      -> " << o.actual << '\n';
    if (!o.match) t << "      expected " << o.expected << '\n';
  }
  t << matches << "/" << outcomes.size() << " rewrites as expected\n";
  return t.str();
}

// `suite` is "replication" or "neopronoun".
inline int cmd_evaluate(const std::string& tsv, const std::string& conllu, const std::string& suite,
                        const RunConfig& cfg, const std::optional<std::string>& output, std::ostream& out,
                        std::ostream& err) {
  return guarded(err, [&] {
    cfg.validate();
    if (suite != "replication" && suite != "neopronoun") throw ConfigError("unknown suite '" + suite + "'");
    Session session(cfg);
    auto parses = load_conllu_file(conllu, session.lexicons);
    nlohmann::ordered_json report;
    report["record"] = "evaluation";
    report["version"] = kVersion;
    report["suite"] = suite;
    report["backend_name"] = backend_name(cfg, *session.backend);
    report["config"] = cfg.to_json();
    std::string table;
    try {
      if (suite == "replication") {
        auto corpus = load_gold_corpus(read_file(tsv), parses, session.lexicons);
        auto result = run_replication(corpus, *session.pipeline, cfg.workers);
        report["result"] = to_json(result);
        table = format_table(result);
      } else {
        auto cases = load_neopronoun_cases(read_file(tsv), parses);
        StubCorefClient coref(session.lexicons);
        auto outcomes = run_neopronoun_suite(cases, *session.pipeline, &coref);
        report["result"] = to_json(outcomes);
        table = format_table(outcomes);
      }
    } catch (const FormatError& e) {
      throw FormatError(tsv + ": " + e.what());
    }
    with_output(output, out, [&](std::ostream& sink) { sink << report.dump(2) << '\n'; });
    (output ? out : err) << table;
    return kOk;
  });
}

inline int cmd_lexicon_validate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    auto lex = load_lexicons(cfg);
    out << "standard pronouns   " << lex.standard.entries().size() << '\n'
        << "neopronoun entries  " << lex.neopronouns.entries().size() << " (" << lex.neopronouns.surfaces().size()
        << " surfaces)\n"
        << "gendered nouns      " << lex.genders.entries().size() << '\n'
        << "indicating verbs    " << lex.indicating_verbs.lemmas().size() << '\n'
        << "given names         " << lex.names.names().size() << '\n';
    auto problems = check_lexicons(lex);
    for (const auto& p : problems) err << "problem: " << p << '\n';
    if (!problems.empty()) return static_cast<int>(kFormatError);
    out << "ok\n";
    return static_cast<int>(kOk);
  });
}

inline int cmd_make_fixture(const std::string& tsv, const std::string& conllu, const std::string& kind,
                            const RunConfig& cfg, const std::optional<std::string>& output, std::ostream& out,
                            std::ostream& err) {
  return guarded(err, [&] {
    auto k = parse_fixture_kind(kind);
    if (!k) throw ConfigError("unknown fixture kind '" + kind + "' (gold-first, adversarial, mixed)");
    auto lex = load_lexicons(cfg);
    auto corpus = load_gold_corpus(read_file(tsv), load_conllu_file(conllu, lex), lex);
    auto fixture = make_corpus_fixture(corpus, *k, lex, default_fixture_vocabulary(lex));
    with_output(output, out, [&](std::ostream& sink) { sink << fixture.to_json().dump(2) << '\n'; });
    return static_cast<int>(kOk);
  });
}

inline void add_run_options(CLI::App& cmd, RunConfig& cfg, std::string& mode, std::string& backend) {
  cmd.add_option("--mode", mode, "Agreement mode")->check(CLI::IsMember({"austere", "broad"}));
  cmd.add_option("--top-k", cfg.top_k, "Candidates requested per masked position");
  cmd.add_option("--backend", backend, "Fill-mask backend")->check(CLI::IsMember({"remote", "baseline", "fixture"}));
  cmd.add_option("--backend-url", cfg.backend_url, "Model server URL")->envname("PRONOUNFLOW_BACKEND_URL");
  cmd.add_option("--fixtures", cfg.fixtures, "Fixture JSON for the fixture backend");
  cmd.add_option("--no-match-penalty", cfg.no_match_penalty, "Winventor value of a Siamese sentence without pairs");
  cmd.add_option("--model-weight", cfg.model_weight, "Weight of the model score in the aggregate");
  cmd.add_flag("!--model-first", cfg.symbolic_first, "Rank by model score before the symbolic score");
  cmd.add_flag("--explain", cfg.explain, "Include the full decision trace");
  cmd.add_option("--results-per-sentence", cfg.results_per_sentence, "Rewrites emitted per sentence");
  cmd.add_option("--workers", cfg.workers, "Sentences processed in parallel");
  cmd.add_option("--max-in-flight", cfg.max_in_flight, "Concurrent requests to the model server");
  cmd.add_option("--timeout-ms", cfg.timeout_ms, "Per-request timeout for the model server");
  cmd.add_option("--indicator-weights", cfg.indicator_weights, "key = value file overriding indicator weights");
}

inline void add_lexicon_options(CLI::App& cmd, RunConfig& cfg) {
  cmd.add_option("--gender-nouns", cfg.gender_nouns, "Noun gender TSV")->envname("PRONOUNFLOW_GENDER_NOUNS");
  cmd.add_option("--neopronouns", cfg.neopronouns, "Neopronoun TSV")->envname("PRONOUNFLOW_NEOPRONOUNS");
  cmd.add_option("--indicating-verbs", cfg.indicating_verbs, "Indicating verb list")
      ->envname("PRONOUNFLOW_INDICATING_VERBS");
  cmd.add_option("--given-names", cfg.given_names, "Given-name gazetteer TSV")->envname("PRONOUNFLOW_GIVEN_NAMES");
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pronoun calibration over dependency-parsed sentences", "pronounflow"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  RunConfig cfg;
  std::string mode = "austere";
  std::string backend = "baseline";
  std::optional<std::string> output;

  auto* calibrate = app.add_subcommand("calibrate", "Rewrite pronouns in CoNLL-U files, one JSON line per sentence");
  std::vector<std::string> inputs;
  calibrate->add_option("inputs", inputs, "CoNLL-U files")->required();
  calibrate->add_option("-o,--output", output, "Write JSON lines here instead of standard output");
  add_run_options(*calibrate, cfg, mode, backend);
  add_lexicon_options(*calibrate, cfg);

  auto* evaluate = app.add_subcommand("evaluate", "Run the replication or neopronoun experiment on a corpus");
  std::string corpus_tsv, corpus_conllu, suite = "replication";
  evaluate->add_option("corpus", corpus_tsv, "Corpus TSV")->required();
  evaluate->add_option("parses", corpus_conllu, "CoNLL-U parses, one per corpus row")->required();
  evaluate->add_option("--suite", suite, "replication or neopronoun")
      ->check(CLI::IsMember({"replication", "neopronoun"}));
  evaluate->add_option("-o,--output", output, "Write the JSON report here; the table goes to standard output");
  add_run_options(*evaluate, cfg, mode, backend);
  add_lexicon_options(*evaluate, cfg);

  auto* lexicon = app.add_subcommand("lexicon", "Lexicon utilities");
  lexicon->require_subcommand(1);
  auto* validate = lexicon->add_subcommand("validate", "Load and cross-check the lexicons");
  add_lexicon_options(*validate, cfg);

  auto* fixture = app.add_subcommand("fixture", "Build a fixture backend file from a gold corpus");
  std::string kind = "gold-first";
  fixture->add_option("corpus", corpus_tsv, "Corpus TSV")->required();
  fixture->add_option("parses", corpus_conllu, "CoNLL-U parses")->required();
  fixture->add_option("--kind", kind, "gold-first, adversarial or mixed");
  fixture->add_option("-o,--output", output, "Write the fixture here instead of standard output");
  add_lexicon_options(*fixture, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
      app.exit(e, out, err);
      return kOk;
    }
    app.exit(e, out, err);
    return kConfigError;
  }

  cfg.mode = *parse_mode(mode);
  cfg.backend = backend == "remote" ? BackendKind::remote : backend == "fixture" ? BackendKind::fixture : BackendKind::baseline;

  if (calibrate->parsed()) return cmd_calibrate(inputs, cfg, output, out, err);
  if (evaluate->parsed()) return cmd_evaluate(corpus_tsv, corpus_conllu, suite, cfg, output, out, err);
  if (validate->parsed()) return cmd_lexicon_validate(cfg, out, err);
  if (fixture->parsed()) return cmd_make_fixture(corpus_tsv, corpus_conllu, kind, cfg, output, out, err);
  return kConfigError;
}

}  // namespace pronounflow::cli
