#pragma once

// Replication (hit-and-miss) and neopronoun-rewriting experiments, plus
// the corpus readers, fixture factories and a toy coreference resolver
// they rely on.
//
// Gold corpus: a TSV of `text<TAB>gold1,gold2,...` lines (gold pronouns in
// sentence order, possibly empty) with a sibling CoNLL-U file holding one
// parse per TSV line, in the same order. Neopronoun corpus: a TSV of
// `input<TAB>expected` lines with the parses of the inputs.

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "pronounflow/conllu.hpp"
#include "pronounflow/error.hpp"
#include "pronounflow/fillmask.hpp"
#include "pronounflow/identifier.hpp"
#include "pronounflow/io.hpp"
#include "pronounflow/lexicon.hpp"
#include "pronounflow/matcher.hpp"
#include "pronounflow/text.hpp"
#include "pronounflow/winventor.hpp"

namespace pronounflow {

struct GoldSentence {
  std::string text;
  AnnotatedSentence parse;
  std::vector<std::string> gold_pronouns;
};

struct NeopronounCase {
  AnnotatedSentence input;
  std::string expected;
};

namespace detail {

struct TsvRow {
  std::size_t line = 0;
  std::string first;
  std::string second;
};

inline std::vector<TsvRow> read_two_column_tsv(std::string_view body) {
  std::vector<TsvRow> rows;
  std::size_t line_no = 0;
  for (auto raw : text::split(body, '\n')) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (text::trim(raw).empty() || raw.front() == '#') continue;
    auto cols = text::split(raw, '\t');
    if (cols.size() != 2) throw FormatError("expected 2 tab-separated columns, found " + std::to_string(cols.size()), line_no);
    rows.push_back({line_no, std::string(cols[0]), std::string(cols[1])});
  }
  return rows;
}

inline void check_row_count(const std::vector<TsvRow>& rows, const Document& parses) {
  if (rows.size() != parses.sentences.size()) {
    throw FormatError("corpus has " + std::to_string(rows.size()) + " rows but " +
                      std::to_string(parses.sentences.size()) + " parsed sentences");
  }
}

}  // namespace detail

inline std::vector<GoldSentence> load_gold_corpus(std::string_view tsv, const Document& parses, const Lexicons& lex) {
  auto rows = detail::read_two_column_tsv(tsv);
  detail::check_row_count(rows, parses);
  std::vector<GoldSentence> corpus;
  corpus.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    GoldSentence g;
    g.text = row.first;
    g.parse = parses.sentences[i];
    if (g.parse.source_text != g.text) {
      throw FormatError("text does not match parse '" + g.parse.sentence_id + "'", row.line);
    }
    for (auto p : text::split(row.second, ',')) {
      auto t = text::trim(p);
      if (!t.empty()) g.gold_pronouns.push_back(text::to_lower(t));
    }
    auto found = find_pronouns(g.parse, lex);
    bool aligned = found.size() == g.gold_pronouns.size();
    for (std::size_t k = 0; aligned && k < found.size(); ++k) {
      aligned = text::iequals(found[k].surface, g.gold_pronouns[k]);
    }
    if (!aligned) {
      std::string seen;
      for (const auto& o : found) seen += (seen.empty() ? "" : ",") + text::to_lower(o.surface);
      throw FormatError("gold pronouns '" + row.second + "' do not match pronouns in the parse '" + seen + "'",
                        row.line);
    }
    corpus.push_back(std::move(g));
  }
  return corpus;
}

inline std::vector<NeopronounCase> load_neopronoun_cases(std::string_view tsv, const Document& parses) {
  auto rows = detail::read_two_column_tsv(tsv);
  detail::check_row_count(rows, parses);
  std::vector<NeopronounCase> cases;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (parses.sentences[i].source_text != rows[i].first) {
      throw FormatError("input does not match parse '" + parses.sentences[i].sentence_id + "'", rows[i].line);
    }
    cases.push_back({parses.sentences[i], rows[i].second});
  }
  return cases;
}

inline Document load_conllu_file(const std::filesystem::path& path, const Lexicons& lex) {
  ParseOptions opts;
  opts.doc_id = path.stem().string();
  opts.gazetteer = &lex.names;
  return parse_conllu(std::string_view(read_file(path)), opts);
}

// ---------------------------------------------------------------------------
// Replication

struct SentenceOutcome {
  std::string sentence_id;
  std::vector<std::string> gold;
  std::vector<std::string> winners;
  bool rejected = false;
  bool hit = false;
  bool winventor_based = false;
  std::optional<SkipReason> skipped_reason;
  int words = 0;
};

struct ReplicationResult {
  int total = 0;
  int parsed = 0;
  int rejected = 0;
  int hits = 0;
  double accuracy = 0.0;
  double avg_sentence_length = 0.0;
  double avg_pronouns = 0.0;
  double winventor_share = 0.0;
  double model_share = 0.0;
  // Set when nothing was parsed and the rates above are placeholders.
  bool undefined_rates = false;
  std::vector<SentenceOutcome> sentences;
};

inline int word_count(const AnnotatedSentence& s) {
  return static_cast<int>(std::count_if(s.tokens.begin(), s.tokens.end(),
                                        [](const Token& t) { return t.upos != "PUNCT"; }));
}

inline SentenceOutcome evaluate_sentence(const GoldSentence& g, const Pipeline& p) {
  SentenceOutcome o;
  o.sentence_id = g.parse.sentence_id;
  o.gold = g.gold_pronouns;
  o.words = word_count(g.parse);
  auto report = calibrate_sentence(g.parse, p);
  o.skipped_reason = report.skipped_reason;
  o.rejected = report.skipped_reason == SkipReason::rejected_unsupported;
  if (o.rejected) return o;
  int winventor = 0;
  for (const auto& grp : report.groups) {
    o.winners.push_back(grp.winner().siamese.candidate.pronoun);
    if (grp.provenance == Provenance::winventor) ++winventor;
  }
  o.winventor_based = 2 * winventor > static_cast<int>(report.groups.size());
  o.hit = report.skipped_reason != SkipReason::backend_failed && o.winners.size() == o.gold.size() &&
          std::equal(o.winners.begin(), o.winners.end(), o.gold.begin(),
                     [](const std::string& a, const std::string& b) { return text::iequals(a, b); });
  return o;
}

// Order-independent: the statistics depend only on the multiset of outcomes.
inline ReplicationResult summarize(std::vector<SentenceOutcome> outcomes) {
  ReplicationResult r;
  r.total = static_cast<int>(outcomes.size());
  long words = 0;
  long pronouns = 0;
  int winventor = 0;
  for (const auto& o : outcomes) {
    if (o.rejected) {
      ++r.rejected;
      continue;
    }
    ++r.parsed;
    if (o.hit) ++r.hits;
    if (o.winventor_based) ++winventor;
    words += o.words;
    pronouns += static_cast<long>(o.gold.size());
  }
  if (r.parsed == 0) {
    r.undefined_rates = true;
  } else {
    const double n = r.parsed;
    r.accuracy = r.hits / n;
    r.avg_sentence_length = static_cast<double>(words) / n;
    r.avg_pronouns = static_cast<double>(pronouns) / n;
    r.winventor_share = winventor / n;
    r.model_share = (r.parsed - winventor) / n;
  }
  r.sentences = std::move(outcomes);
  return r;
}

namespace detail {

template <typename Item, typename Fn>
auto parallel_map(const std::vector<Item>& items, unsigned workers, Fn fn) {
  using Out = decltype(fn(items.front()));
  std::vector<Out> out(items.size());
  if (workers <= 1 || items.size() < 2) {
    for (std::size_t i = 0; i < items.size(); ++i) out[i] = fn(items[i]);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < std::min<std::size_t>(workers, items.size()); ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < items.size(); i = next++) {
          try {
            out[i] = fn(items[i]);
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
          }
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace detail

inline ReplicationResult run_replication(const std::vector<GoldSentence>& corpus, const Pipeline& p,
                                         unsigned workers = 1) {
  if (corpus.empty()) return summarize({});
  return summarize(detail::parallel_map(corpus, workers, [&](const GoldSentence& g) { return evaluate_sentence(g, p); }));
}

inline nlohmann::ordered_json to_json(const ReplicationResult& r) {
  nlohmann::ordered_json j;
  j["total"] = r.total;
  j["parsed"] = r.parsed;
  j["rejected"] = r.rejected;
  j["hits"] = r.hits;
  j["accuracy"] = r.accuracy;
  j["avg_sentence_length"] = r.avg_sentence_length;
  j["avg_pronouns"] = r.avg_pronouns;
  j["winventor_share"] = r.winventor_share;
  j["model_share"] = r.model_share;
  j["undefined_rates"] = r.undefined_rates;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& o : r.sentences) {
    nlohmann::ordered_json row;
    row["sentence_id"] = o.sentence_id;
    row["gold"] = o.gold;
    row["winners"] = o.winners;
    row["status"] = o.rejected ? "rejected" : o.hit ? "hit" : "miss";
    row["basis"] = o.rejected ? "none" : o.winventor_based ? "winventor" : "model";
    if (o.skipped_reason) row["skipped_reason"] = to_string(*o.skipped_reason);
    row["words"] = o.words;
    rows.push_back(std::move(row));
  }
  j["sentences"] = std::move(rows);
  return j;
}

// ---------------------------------------------------------------------------
// Coreference

struct Mention {
  std::string sentence_id;
  int token_index = 0;
  std::string surface;

  friend bool operator==(const Mention&, const Mention&) = default;
};

// First mention is the antecedent.
struct MentionCluster {
  std::vector<Mention> mentions;
};

class CorefClient {
 public:
  virtual ~CorefClient() = default;
  virtual std::vector<MentionCluster> resolve(const Document& doc) const = 0;
};

// Links each standard pronoun to the nearest preceding entity-tagged noun
// whose gender and number agree. Neopronouns are never resolved.
inline std::vector<MentionCluster> coref_client_stub(const Document& doc, const Lexicons& lex) {
  struct Entity {
    const AnnotatedSentence* sentence;
    const Token* token;
  };
  std::vector<Entity> seen;
  std::vector<MentionCluster> clusters;
  std::map<std::size_t, std::size_t> cluster_of;  // entity position -> cluster
  for (const auto& s : doc.sentences) {
    for (const auto& t : s.tokens) {
      if (t.entity_tag && is_nominal(t) && !is_np_modifier(s, t)) {
        seen.push_back({&s, &t});
        continue;
      }
      if (t.upos != "PRON") continue;
      auto entries = lex.standard.lookup(t.surface);
      if (entries.empty()) continue;
      const auto entry = resolve_entry(t, entries);
      for (std::size_t i = seen.size(); i-- > 0;) {
        const auto& e = seen[i];
        const bool plural = is_plural(*e.token);
        const Gender g = antecedent_gender(*e.sentence, *e.token, lex);
        if (!number_matches(entry.number, plural)) continue;
        if (!gender_compatible(entry.gender, g, AgreementMode::austere, plural)) continue;
        auto it = cluster_of.find(i);
        if (it == cluster_of.end()) {
          it = cluster_of.emplace(i, clusters.size()).first;
          clusters.push_back({{Mention{e.sentence->sentence_id, e.token->index, e.token->surface}}});
        }
        clusters[it->second].mentions.push_back({s.sentence_id, t.index, t.surface});
        break;
      }
    }
  }
  return clusters;
}

class StubCorefClient final : public CorefClient {
 public:
  explicit StubCorefClient(const Lexicons& lex) : lex_(lex) {}
  std::vector<MentionCluster> resolve(const Document& doc) const override { return coref_client_stub(doc, lex_); }

 private:
  const Lexicons& lex_;
};

inline int resolved_pronoun_count(const std::vector<MentionCluster>& clusters) {
  int n = 0;
  for (const auto& c : clusters) n += static_cast<int>(c.mentions.size()) - 1;
  return n;
}

// The parse with each winning pronoun substituted (token surfaces, lemmas
// and text); the tree is unchanged.
inline AnnotatedSentence apply_rewrite(const AnnotatedSentence& s, const CalibrationReport& r) {
  AnnotatedSentence out = s;
  if (r.groups.empty()) return out;
  for (const auto& g : r.groups) {
    const auto& w = g.winner().siamese;
    auto& t = out.tokens[static_cast<std::size_t>(w.token_index() - 1)];
    t.surface = cased_pronoun(w.candidate.pronoun, w.variant.capitalize);
    t.lemma = w.candidate.pronoun;
  }
  out.source_text = r.rewritten_text;
  if (!detail::align_tokens(out)) throw ContractViolation("rewrite of '" + s.sentence_id + "' broke token alignment");
  return out;
}

// ---------------------------------------------------------------------------
// Neopronoun suite

struct NeopronounOutcome {
  std::string sentence_id;
  std::string input;
  std::string expected;
  std::string actual;
  bool match = false;
  std::optional<SkipReason> skipped_reason;
  int coref_before = 0;
  int coref_after = 0;
};

inline std::vector<NeopronounOutcome> run_neopronoun_suite(const std::vector<NeopronounCase>& cases,
                                                           const Pipeline& p, const CorefClient* coref = nullptr) {
  std::vector<NeopronounOutcome> out;
  for (const auto& c : cases) {
    auto report = calibrate_sentence(c.input, p);
    NeopronounOutcome o;
    o.sentence_id = c.input.sentence_id;
    o.input = c.input.source_text;
    o.expected = c.expected;
    o.actual = report.rewritten_text;
    o.match = text::trim(o.actual) == text::trim(o.expected);
    o.skipped_reason = report.skipped_reason;
    if (coref) {
      o.coref_before = resolved_pronoun_count(coref->resolve(Document{"before", {c.input}}));
      o.coref_after = resolved_pronoun_count(coref->resolve(Document{"after", {apply_rewrite(c.input, report)}}));
    }
    out.push_back(std::move(o));
  }
  return out;
}

inline nlohmann::ordered_json to_json(const std::vector<NeopronounOutcome>& outcomes) {
  auto rows = nlohmann::ordered_json::array();
  int matches = 0;
  for (const auto& o : outcomes) {
    matches += o.match ? 1 : 0;
    nlohmann::ordered_json row;
    row["sentence_id"] = o.sentence_id;
    row["input"] = o.input;
    row["expected"] = o.expected;
    row["actual"] = o.actual;
    row["match"] = o.match;
    if (o.skipped_reason) row["skipped_reason"] = to_string(*o.skipped_reason);
    row["coref_before"] = o.coref_before;
    row["coref_after"] = o.coref_after;
    rows.push_back(std::move(row));
  }
  return {{"cases", static_cast<int>(outcomes.size())}, {"matches", matches}, {"results", std::move(rows)}};
}

// ---------------------------------------------------------------------------
// Fixture factories for the replication harness

enum class FixtureKind { gold_first, adversarial, mixed };

inline std::optional<FixtureKind> parse_fixture_kind(std::string_view s) {
  if (s == "gold-first") return FixtureKind::gold_first;
  if (s == "adversarial") return FixtureKind::adversarial;
  if (s == "mixed") return FixtureKind::mixed;
  return std::nullopt;
}

// Standard pronouns minus "him", mirroring a model whose pronoun set
// lacks it.
inline std::set<std::string> default_fixture_vocabulary(const Lexicons& lex) {
  auto v = lex.standard.surfaces();
  v.erase("him");
  return v;
}

// gold-first: each mask predicts its gold pronoun alone.
// adversarial: each mask predicts up to two supported pronouns of the
//   gold's case, never the gold.
// mixed: gold-first for even corpus positions, adversarial for odd ones.
// Sentences with an unsupported gold pronoun get no entries.
inline FixtureBackend make_corpus_fixture(const std::vector<GoldSentence>& corpus, FixtureKind kind,
                                          const Lexicons& lex, std::set<std::string> supported) {
  FixtureBackend::Table table;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& g = corpus[i];
    auto occurrences = find_pronouns(g.parse, lex);
    const bool rejected = std::any_of(occurrences.begin(), occurrences.end(), [&](const PronounOccurrence& o) {
      return !o.entry.is_neopronoun && !supported.count(text::to_lower(o.surface));
    });
    if (rejected) continue;
    const bool gold_first = kind == FixtureKind::gold_first || (kind == FixtureKind::mixed && i % 2 == 0);
    for (std::size_t k = 0; k < occurrences.size(); ++k) {
      const auto& occ = occurrences[k];
      const std::string gold = text::to_lower(occ.surface);
      std::vector<Prediction> preds;
      if (gold_first) {
        preds.push_back({gold, 0.9});
      } else {
        std::set<std::string> alternatives;
        for (const auto& e : lex.standard.entries()) {
          if (e.pronoun_case == occ.entry.pronoun_case && e.surface != gold && supported.count(e.surface)) {
            alternatives.insert(e.surface);
          }
        }
        if (alternatives.empty()) {
          for (const auto& s : supported) {
            if (s != gold) alternatives.insert(s);
          }
        }
        double score = 0.6;
        for (const auto& a : alternatives) {
          preds.push_back({a, score});
          if (preds.size() == 2) break;
          score = 0.3;
        }
      }
      auto masked = mask_sentence(g.parse, occ).masked_text;
      auto [it, inserted] = table.emplace(masked, preds);
      if (!inserted && it->second != preds) {
        throw ConfigError("corpus sentences share the masked text '" + masked + "' with different predictions");
      }
    }
  }
  const char* names[] = {"gold-first", "adversarial", "mixed"};
  return FixtureBackend(names[static_cast<int>(kind)], std::move(supported), std::move(table));
}

}  // namespace pronounflow
