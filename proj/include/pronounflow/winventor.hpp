#pragma once

// Symbolic scoring of Siamese sentences: pair the (re-tagged) candidate
// pronoun with gender/number-compatible nouns and proper nouns, compute the
// binary agreement factors, and add Mitkov's antecedent indicators.

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "pronounflow/conllu.hpp"
#include "pronounflow/error.hpp"
#include "pronounflow/identifier.hpp"
#include "pronounflow/lexicon.hpp"
#include "pronounflow/merger.hpp"
#include "pronounflow/text.hpp"

namespace pronounflow {

inline constexpr double kDefaultNoMatchPenalty = -60.0;

// Indicator magnitudes (Mitkov 1998 defaults).
struct IndicatorWeights {
  int indefinite = -1;
  int indicating_verb = 1;
  int reiteration_twice = 1;
  int reiteration_often = 2;  // three or more mentions
  int prepositional = -1;
  int collocation = 2;

  // `key = value` lines; '#' comments and blank lines ignored.
  static IndicatorWeights from_key_values(std::string_view body) {
    IndicatorWeights w;
    const std::map<std::string, int IndicatorWeights::*, std::less<>> keys{
        {"indefinite", &IndicatorWeights::indefinite},
        {"indicating_verb", &IndicatorWeights::indicating_verb},
        {"reiteration_twice", &IndicatorWeights::reiteration_twice},
        {"reiteration_often", &IndicatorWeights::reiteration_often},
        {"prepositional", &IndicatorWeights::prepositional},
        {"collocation", &IndicatorWeights::collocation},
    };
    std::size_t line_no = 0;
    for (const auto& raw : text::split(body, '\n')) {
      ++line_no;
      auto line = text::trim(raw);
      if (line.empty() || line.front() == '#') continue;
      auto eq = line.find('=');
      if (eq == std::string_view::npos) throw ConfigError("line " + std::to_string(line_no) + ": expected key=value");
      auto key = std::string(text::trim(line.substr(0, eq)));
      auto value = std::string(text::trim(line.substr(eq + 1)));
      auto it = keys.find(key);
      if (it == keys.end()) throw ConfigError("line " + std::to_string(line_no) + ": unknown indicator '" + key + "'");
      auto parsed = detail::parse_int(value);
      if (!parsed) throw ConfigError("line " + std::to_string(line_no) + ": not an integer: " + value);
      w.*(it->second) = *parsed;
    }
    return w;
  }
};

enum class AntecedentKind { noun, proper_noun };

inline std::string_view to_string(AntecedentKind k) {
  return k == AntecedentKind::noun ? "noun" : "proper_noun";
}

// One step of a dependency path. `upward` means from child to head.
struct DependencyEdge {
  int from = 0;
  int to = 0;
  std::string deprel;
  bool upward = false;

  friend bool operator==(const DependencyEdge&, const DependencyEdge&) = default;
};

struct CandidatePair {
  int pronoun_index = 0;
  int antecedent_index = 0;
  AntecedentKind antecedent_kind = AntecedentKind::noun;
  std::vector<DependencyEdge> relation_path;
};

struct AgreementFactors {
  int number_agreement = 0;
  int gender_agreement = 0;
  int pronoun_gender_agreement = 0;

  int sum() const { return number_agreement + gender_agreement + pronoun_gender_agreement; }
  friend bool operator==(const AgreementFactors&, const AgreementFactors&) = default;
};

struct MitkovScore {
  int definiteness = 0;
  int indicating_verb = 0;
  int lexical_reiteration = 0;
  int non_prepositional = 0;
  int collocation = 0;
  int total = 0;
};

struct ScoredPair {
  CandidatePair pair;
  Gender antecedent_gender = Gender::unknown;
  AgreementFactors factors;
  MitkovScore mitkov;

  double value() const { return factors.sum() + mitkov.total; }
};

struct WinventorAssessment {
  std::optional<PronounEntry> pronoun;  // the re-tagged candidate
  std::vector<ScoredPair> pairs;
  double winventor_value = kDefaultNoMatchPenalty;
  bool matched = false;
};

// Document-wide statistics for lexical reiteration and collocation.
class DocumentContext {
 public:
  struct Mention {
    std::string sentence_id;
    int token_index = 0;
    std::string lemma;
    std::string predicate;
    std::string relation;
  };

  DocumentContext() = default;
  explicit DocumentContext(const AnnotatedSentence& sentence) { add(sentence); }
  explicit DocumentContext(const Document& doc) {
    for (const auto& s : doc.sentences) add(s);
  }

  int count(std::string_view lemma) const {
    auto it = counts_.find(text::to_lower(lemma));
    return it == counts_.end() ? 0 : it->second;
  }

  bool has_pattern(std::string_view lemma, std::string_view predicate, std::string_view relation) const {
    auto key = text::to_lower(lemma);
    return std::any_of(mentions_.begin(), mentions_.end(), [&](const Mention& m) {
      return m.lemma == key && m.predicate == predicate && m.relation == relation;
    });
  }

  const std::vector<Mention>& mentions() const { return mentions_; }

 private:
  void add(const AnnotatedSentence& s);

  std::map<std::string, int, std::less<>> counts_;
  std::vector<Mention> mentions_;
};

inline bool is_nominal(const Token& t) { return t.upos == "NOUN" || t.upos == "PROPN"; }

inline std::string base_relation(std::string_view deprel) {
  return std::string(deprel.substr(0, deprel.find(':')));
}

// (head lemma, base relation) of a token: the collocation pattern.
inline std::pair<std::string, std::string> collocation_pattern(const AnnotatedSentence& s, const Token& t) {
  std::string pred = t.head == 0 ? std::string("ROOT") : effective_lemma(s.token(t.head));
  return {pred, base_relation(t.deprel)};
}

inline void DocumentContext::add(const AnnotatedSentence& s) {
  for (const auto& t : s.tokens) {
    if (!is_nominal(t)) continue;
    auto lemma = effective_lemma(t);
    ++counts_[lemma];
    auto [pred, rel] = collocation_pattern(s, t);
    mentions_.push_back({s.sentence_id, t.index, lemma, pred, rel});
  }
}

// Nearest VERB ancestor, if any.
inline std::optional<int> governing_verb(const AnnotatedSentence& s, int index) {
  int cur = s.token(index).head;
  for (std::size_t steps = 0; cur != 0 && steps < s.size(); ++steps) {
    if (s.token(cur).upos == "VERB") return cur;
    cur = s.token(cur).head;
  }
  return std::nullopt;
}

// NP-internal name parts and modifiers ("Mrs." in "Mrs. Smith", "town" in
// "town councilors") are folded into their head.
inline bool is_np_modifier(const AnnotatedSentence& s, const Token& t) {
  if (t.head == 0) return false;
  auto rel = base_relation(t.deprel);
  return (rel == "flat" || rel == "compound") && is_nominal(s.token(t.head));
}

inline bool is_candidate_antecedent(const AnnotatedSentence& s, const Token& t) {
  if (!is_nominal(t)) return false;
  if (Gazetteer::title(t.surface) && t.upos == "PROPN") return false;
  return !is_np_modifier(s, t);
}

// Gender of a noun or proper noun. Person names resolve through titles and
// the given-name gazetteer (unresolved names are `either`); other named
// entities are neuter; common nouns use the gender list.
inline Gender antecedent_gender(const AnnotatedSentence& s, const Token& t, const Lexicons& lex) {
  const bool proper = t.upos == "PROPN";
  if (t.entity_tag && *t.entity_tag != "PERSON") return Gender::neuter;
  if (t.entity_tag || (proper && lex.names.given_name(t.surface))) {
    std::vector<int> group{t.index};
    for (const auto& o : s.tokens) {
      if (o.head == t.index && is_np_modifier(s, o)) group.push_back(o.index);
    }
    std::sort(group.begin(), group.end());
    // A title right before the name group decides first.
    for (int i : group) {
      if (auto g = Gazetteer::title(s.token(i).surface); g && *g != Gender::either) return *g;
    }
    if (group.front() > 1) {
      if (auto g = Gazetteer::title(s.token(group.front() - 1).surface); g && *g != Gender::either) return *g;
    }
    for (int i : group) {
      if (auto g = lex.names.given_name(s.token(i).surface)) return *g;
    }
    return Gender::either;
  }
  return lex.genders.gender(effective_lemma(t));
}

inline bool number_matches(GrammaticalNumber pronoun, bool antecedent_plural) {
  switch (pronoun) {
    case GrammaticalNumber::either: return true;
    case GrammaticalNumber::singular: return !antecedent_plural;
    case GrammaticalNumber::plural: return antecedent_plural;
  }
  return false;
}

// Shortest undirected path between two tokens of a dependency tree.
inline std::vector<DependencyEdge> dependency_path(const AnnotatedSentence& s, int from, int to) {
  const int n = static_cast<int>(s.size());
  std::vector<int> prev(static_cast<std::size_t>(n + 1), -1);
  std::vector<DependencyEdge> via(static_cast<std::size_t>(n + 1));
  std::deque<int> queue{from};
  prev[static_cast<std::size_t>(from)] = from;
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    if (cur == to) break;
    auto visit = [&](int next, DependencyEdge edge) {
      if (next < 1 || prev[static_cast<std::size_t>(next)] != -1) return;
      prev[static_cast<std::size_t>(next)] = cur;
      via[static_cast<std::size_t>(next)] = std::move(edge);
      queue.push_back(next);
    };
    const auto& tok = s.token(cur);
    if (tok.head != 0) visit(tok.head, {cur, tok.head, tok.deprel, true});
    for (int c : s.children(cur)) visit(c, {cur, c, s.token(c).deprel, false});
  }
  std::vector<DependencyEdge> path;
  if (prev[static_cast<std::size_t>(to)] == -1) return path;
  for (int cur = to; cur != from; cur = prev[static_cast<std::size_t>(cur)]) {
    path.push_back(via[static_cast<std::size_t>(cur)]);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

inline std::vector<CandidatePair> extract_candidate_pairs(const AnnotatedSentence& s, int pronoun_index,
                                                          const PronounEntry& pronoun, AgreementMode mode,
                                                          const Lexicons& lex) {
  std::vector<CandidatePair> out;
  for (const auto& t : s.tokens) {
    if (t.index == pronoun_index || !is_candidate_antecedent(s, t)) continue;
    if (mode == AgreementMode::austere) {
      const bool plural = is_plural(t);
      if (!gender_compatible(pronoun.gender, antecedent_gender(s, t, lex), mode, plural)) continue;
      if (!number_matches(pronoun.number, plural)) continue;
    }
    out.push_back({pronoun_index, t.index,
                   t.upos == "PROPN" ? AntecedentKind::proper_noun : AntecedentKind::noun,
                   dependency_path(s, pronoun_index, t.index)});
  }
  return out;
}

inline std::vector<CandidatePair> extract_candidate_pairs(const AnnotatedSentence& s,
                                                          const PronounOccurrence& occ, AgreementMode mode,
                                                          const Lexicons& lex) {
  return extract_candidate_pairs(s, occ.token_index, occ.entry, mode, lex);
}

inline AgreementFactors agreement_factors(const CandidatePair& pair, const PronounEntry& pronoun,
                                          const AnnotatedSentence& s, const Lexicons& lex) {
  const auto& ante = s.token(pair.antecedent_index);
  const bool plural = is_plural(ante);
  const Gender g = antecedent_gender(s, ante, lex);
  AgreementFactors f;
  f.number_agreement = number_matches(pronoun.number, plural) ? 1 : 0;
  f.gender_agreement =
      g != Gender::unknown && gender_compatible(pronoun.gender, g, AgreementMode::austere, plural) ? 1 : 0;
  f.pronoun_gender_agreement = pronoun.gender == g ? 1 : 0;
  return f;
}

inline MitkovScore mitkov_score(const CandidatePair& pair, const AnnotatedSentence& s,
                                const IndicatingVerbList& verbs, const DocumentContext& ctx,
                                const IndicatorWeights& w = {}) {
  static const std::set<std::string, std::less<>> kDefinite{"the", "this", "that", "these", "those"};
  const auto& ante = s.token(pair.antecedent_index);
  MitkovScore m;

  bool definite = ante.upos == "PROPN";
  bool prepositional = false;
  for (int c : s.children(ante.index)) {
    const auto& child = s.token(c);
    auto rel = base_relation(child.deprel);
    if (rel == "det" && kDefinite.count(effective_lemma(child))) definite = true;
    if (child.deprel == "nmod:poss" || child.deprel == "det:poss") definite = true;
    if (rel == "case" && child.upos == "ADP") prepositional = true;
  }
  m.definiteness = definite ? 0 : w.indefinite;

  if (auto v = governing_verb(s, ante.index); v && verbs.contains(effective_lemma(s.token(*v)))) {
    m.indicating_verb = w.indicating_verb;
  }

  const int mentions = ctx.count(effective_lemma(ante));
  m.lexical_reiteration = mentions >= 3 ? w.reiteration_often : mentions == 2 ? w.reiteration_twice : 0;

  m.non_prepositional = prepositional ? w.prepositional : 0;

  auto [pred, rel] = collocation_pattern(s, s.token(pair.pronoun_index));
  if (ctx.has_pattern(effective_lemma(ante), pred, rel)) m.collocation = w.collocation;

  m.total = m.definiteness + m.indicating_verb + m.lexical_reiteration + m.non_prepositional + m.collocation;
  return m;
}

struct WinventorOptions {
  AgreementMode mode = AgreementMode::austere;
  IndicatorWeights weights;
  double no_match_penalty = kDefaultNoMatchPenalty;
};

// Scores one Siamese sentence. The candidate is re-tagged in place of the
// original pronoun; the sentence's value is its best pair (or the
// no-match penalty when nothing pairs).
inline WinventorAssessment assess(const AnnotatedSentence& s, const SiameseSentence& siamese,
                                  const Lexicons& lex, const DocumentContext& ctx,
                                  const WinventorOptions& options = {}) {
  if (siamese.parent_sentence_id != s.sentence_id) {
    throw ContractViolation("siamese of '" + siamese.parent_sentence_id + "' assessed against '" +
                            s.sentence_id + "'");
  }
  WinventorAssessment a;
  a.winventor_value = options.no_match_penalty;
  auto entries = lex.entries(siamese.candidate.pronoun);
  if (entries.empty()) return a;
  Token retagged = s.token(siamese.token_index());
  retagged.surface = siamese.candidate.pronoun;
  a.pronoun = resolve_entry(retagged, entries);

  for (auto& pair : extract_candidate_pairs(s, siamese.token_index(), *a.pronoun, options.mode, lex)) {
    ScoredPair sp;
    sp.antecedent_gender = antecedent_gender(s, s.token(pair.antecedent_index), lex);
    sp.factors = agreement_factors(pair, *a.pronoun, s, lex);
    sp.mitkov = mitkov_score(pair, s, lex.indicating_verbs, ctx, options.weights);
    sp.pair = std::move(pair);
    a.pairs.push_back(std::move(sp));
  }
  if (!a.pairs.empty()) {
    a.matched = true;
    a.winventor_value = -std::numeric_limits<double>::infinity();
    for (const auto& p : a.pairs) a.winventor_value = std::max(a.winventor_value, p.value());
  }
  return a;
}

inline WinventorAssessment assess(const AnnotatedSentence& s, const SiameseSentence& siamese,
                                  const Lexicons& lex, const WinventorOptions& options = {}) {
  return assess(s, siamese, lex, DocumentContext(s), options);
}

}  // namespace pronounflow
