#pragma once

// Gender knowledge for the symbolic scorer: pronoun paradigms (standard and
// neopronoun), the gendered-noun list, indicating verbs, and the given-name
// gazetteer used to resolve proper-noun gender.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pronounflow/error.hpp"
#include "pronounflow/lexicon_data.hpp"
#include "pronounflow/text.hpp"

namespace pronounflow {

enum class Gender { masculine, feminine, neuter, neutral, either, unknown };
enum class PronounCase { subject, object, possessive_determiner, possessive_pronoun, reflexive };
enum class GrammaticalNumber { singular, plural, either };
enum class AgreementMode { austere, broad };

inline std::string_view to_string(Gender g) {
  constexpr std::array<std::string_view, 6> names{"masculine", "feminine", "neuter",
                                                  "neutral",   "either",   "unknown"};
  return names[static_cast<std::size_t>(g)];
}

inline std::string_view to_string(PronounCase c) {
  constexpr std::array<std::string_view, 5> names{
      "subject", "object", "possessive_determiner", "possessive_pronoun", "reflexive"};
  return names[static_cast<std::size_t>(c)];
}

inline std::string_view to_string(GrammaticalNumber n) {
  constexpr std::array<std::string_view, 3> names{"singular", "plural", "either"};
  return names[static_cast<std::size_t>(n)];
}

inline std::string_view to_string(AgreementMode m) {
  return m == AgreementMode::austere ? "austere" : "broad";
}

inline std::optional<Gender> parse_gender(std::string_view s) {
  for (auto g : {Gender::masculine, Gender::feminine, Gender::neuter, Gender::neutral,
                 Gender::either, Gender::unknown}) {
    if (s == to_string(g)) return g;
  }
  return std::nullopt;
}

inline std::optional<PronounCase> parse_case(std::string_view s) {
  for (auto c : {PronounCase::subject, PronounCase::object, PronounCase::possessive_determiner,
                 PronounCase::possessive_pronoun, PronounCase::reflexive}) {
    if (s == to_string(c)) return c;
  }
  return std::nullopt;
}

inline std::optional<GrammaticalNumber> parse_number(std::string_view s) {
  for (auto n : {GrammaticalNumber::singular, GrammaticalNumber::plural, GrammaticalNumber::either}) {
    if (s == to_string(n)) return n;
  }
  return std::nullopt;
}

inline std::optional<AgreementMode> parse_mode(std::string_view s) {
  if (s == "austere") return AgreementMode::austere;
  if (s == "broad") return AgreementMode::broad;
  return std::nullopt;
}

struct PronounEntry {
  std::string surface;
  Gender gender = Gender::unknown;
  PronounCase pronoun_case = PronounCase::subject;
  GrammaticalNumber number = GrammaticalNumber::singular;
  bool is_neopronoun = false;

  friend bool operator==(const PronounEntry&, const PronounEntry&) = default;
};

// An ordered pronoun paradigm table. A surface may carry several cases
// ("her" is object and possessive determiner); lookups return them in
// table order.
class PronounTable {
 public:
  PronounTable() = default;

  explicit PronounTable(std::vector<PronounEntry> entries) : entries_(std::move(entries)) {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      auto& e = entries_[i];
      if (e.surface != text::to_lower(e.surface)) {
        throw FormatError("pronoun surface must be lowercase: " + e.surface);
      }
      auto& slots = index_[e.surface];
      for (auto j : slots) {
        if (entries_[j].pronoun_case == e.pronoun_case) {
          throw FormatError("duplicate (surface, case) pair: " + e.surface + "/" +
                            std::string(to_string(e.pronoun_case)));
        }
      }
      slots.push_back(i);
    }
  }

  // he/him/his -> masculine, she/her/hers -> feminine, it/its -> neuter,
  // they/them/their/theirs -> neutral; reflexives follow their paradigm.
  static PronounTable standard() {
    using C = PronounCase;
    using N = GrammaticalNumber;
    auto e = [](std::string s, Gender g, C c, N n) {
      return PronounEntry{std::move(s), g, c, n, false};
    };
    const auto m = Gender::masculine, f = Gender::feminine, x = Gender::neuter,
               t = Gender::neutral;
    return PronounTable({
        e("he", m, C::subject, N::singular),
        e("him", m, C::object, N::singular),
        e("his", m, C::possessive_determiner, N::singular),
        e("his", m, C::possessive_pronoun, N::singular),
        e("himself", m, C::reflexive, N::singular),
        e("she", f, C::subject, N::singular),
        e("her", f, C::object, N::singular),
        e("her", f, C::possessive_determiner, N::singular),
        e("hers", f, C::possessive_pronoun, N::singular),
        e("herself", f, C::reflexive, N::singular),
        e("it", x, C::subject, N::singular),
        e("it", x, C::object, N::singular),
        e("its", x, C::possessive_determiner, N::singular),
        e("itself", x, C::reflexive, N::singular),
        e("they", t, C::subject, N::either),
        e("them", t, C::object, N::either),
        e("their", t, C::possessive_determiner, N::either),
        e("theirs", t, C::possessive_pronoun, N::either),
        e("themselves", t, C::reflexive, N::plural),
        e("themself", t, C::reflexive, N::singular),
    });
  }

  // TSV rows `surface<TAB>gender<TAB>case<TAB>number`; '#' starts a comment.
  static PronounTable from_tsv(std::string_view tsv, bool neopronouns) {
    std::vector<PronounEntry> entries;
    std::size_t line_no = 0;
    for (const auto& raw : text::split(tsv, '\n')) {
      ++line_no;
      auto line = text::trim(raw);
      if (line.empty() || line.front() == '#') continue;
      auto cols = text::split(line, '\t');
      if (cols.size() != 4) throw FormatError("expected 4 tab-separated columns", line_no);
      auto g = parse_gender(cols[1]);
      auto c = parse_case(cols[2]);
      auto n = parse_number(cols[3]);
      if (!g || *g == Gender::unknown || *g == Gender::either) {
        throw FormatError("bad pronoun gender '" + cols[1] + "'", line_no);
      }
      if (!c) throw FormatError("bad pronoun case '" + cols[2] + "'", line_no);
      if (!n) throw FormatError("bad pronoun number '" + cols[3] + "'", line_no);
      entries.push_back({cols[0], *g, *c, *n, neopronouns});
    }
    return PronounTable(std::move(entries));
  }

  std::vector<PronounEntry> lookup(std::string_view surface) const {
    std::vector<PronounEntry> out;
    auto it = index_.find(text::to_lower(surface));
    if (it == index_.end()) return out;
    for (auto i : it->second) out.push_back(entries_[i]);
    return out;
  }

  bool contains(std::string_view surface) const {
    return index_.count(text::to_lower(surface)) > 0;
  }

  const std::vector<PronounEntry>& entries() const { return entries_; }

  std::set<std::string> surfaces() const {
    std::set<std::string> out;
    for (const auto& [s, _] : index_) out.insert(s);
    return out;
  }

 private:
  std::vector<PronounEntry> entries_;
  std::map<std::string, std::vector<std::size_t>, std::less<>> index_;
};

class GenderLexicon {
 public:
  GenderLexicon() = default;

  // TSV rows `lemma<TAB>gender`, gender in {masculine, feminine, neuter, either}.
  static GenderLexicon from_tsv(std::string_view tsv, std::string source_name) {
    GenderLexicon lex;
    lex.source_name_ = std::move(source_name);
    std::size_t line_no = 0;
    for (const auto& raw : text::split(tsv, '\n')) {
      ++line_no;
      auto line = text::trim(raw);
      if (line.empty() || line.front() == '#') continue;
      auto cols = text::split(line, '\t');
      if (cols.size() != 2) throw FormatError("expected lemma<TAB>gender", line_no);
      auto g = parse_gender(cols[1]);
      if (!g || *g == Gender::neutral || *g == Gender::unknown) {
        throw FormatError("bad noun gender '" + cols[1] + "'", line_no);
      }
      if (cols[0] != text::to_lower(cols[0])) {
        throw FormatError("lemma must be lowercase: " + cols[0], line_no);
      }
      if (!lex.nouns_.emplace(cols[0], *g).second) {
        throw FormatError("duplicate lemma: " + cols[0], line_no);
      }
    }
    return lex;
  }

  Gender gender(std::string_view lemma) const {
    auto it = nouns_.find(text::to_lower(lemma));
    return it == nouns_.end() ? Gender::unknown : it->second;
  }

  const std::map<std::string, Gender, std::less<>>& entries() const { return nouns_; }
  const std::string& source_name() const { return source_name_; }

 private:
  std::map<std::string, Gender, std::less<>> nouns_;
  std::string source_name_;
};

class IndicatingVerbList {
 public:
  IndicatingVerbList() = default;

  static IndicatingVerbList from_lines(std::string_view lines) {
    IndicatingVerbList list;
    for (const auto& raw : text::split(lines, '\n')) {
      auto line = text::trim(raw);
      if (line.empty() || line.front() == '#') continue;
      list.lemmas_.insert(text::to_lower(line));
    }
    if (list.lemmas_.empty()) throw FormatError("indicating-verb list is empty");
    return list;
  }

  bool contains(std::string_view lemma) const { return lemmas_.count(text::to_lower(lemma)) > 0; }
  const std::set<std::string, std::less<>>& lemmas() const { return lemmas_; }

 private:
  std::set<std::string, std::less<>> lemmas_;
};

// Given names (with gender) and honorific titles. Used to backfill PERSON
// entity tags and to fix the gender of person names.
class Gazetteer {
 public:
  Gazetteer() = default;

  // One surface per line, optionally followed by `<TAB>gender`; names
  // without a gender are treated as `either`.
  static Gazetteer from_tsv(std::string_view tsv) {
    Gazetteer gaz;
    std::size_t line_no = 0;
    for (const auto& raw : text::split(tsv, '\n')) {
      ++line_no;
      auto line = text::trim(raw);
      if (line.empty() || line.front() == '#') continue;
      auto cols = text::split(line, '\t');
      if (cols.size() > 2) throw FormatError("expected surface[<TAB>gender]", line_no);
      Gender g = Gender::either;
      if (cols.size() == 2) {
        auto parsed = parse_gender(cols[1]);
        if (!parsed || (*parsed != Gender::masculine && *parsed != Gender::feminine &&
                        *parsed != Gender::either)) {
          throw FormatError("bad name gender '" + cols[1] + "'", line_no);
        }
        g = *parsed;
      }
      gaz.names_[text::to_lower(cols[0])] = g;
    }
    return gaz;
  }

  std::optional<Gender> given_name(std::string_view surface) const {
    auto it = names_.find(text::to_lower(surface));
    if (it == names_.end()) return std::nullopt;
    return it->second;
  }

  static std::optional<Gender> title(std::string_view surface) {
    static const std::map<std::string, Gender, std::less<>> titles{
        {"mr", Gender::masculine},    {"mr.", Gender::masculine},    {"sir", Gender::masculine},
        {"lord", Gender::masculine},  {"king", Gender::masculine},   {"prince", Gender::masculine},
        {"mrs", Gender::feminine},    {"mrs.", Gender::feminine},    {"ms", Gender::feminine},
        {"ms.", Gender::feminine},    {"miss", Gender::feminine},    {"madam", Gender::feminine},
        {"lady", Gender::feminine},   {"queen", Gender::feminine},   {"princess", Gender::feminine},
        {"dame", Gender::feminine},   {"dr", Gender::either},        {"dr.", Gender::either},
        {"prof", Gender::either},     {"prof.", Gender::either},     {"professor", Gender::either},
    };
    auto it = titles.find(text::to_lower(surface));
    if (it == titles.end()) return std::nullopt;
    return it->second;
  }

  const std::map<std::string, Gender, std::less<>>& names() const { return names_; }

 private:
  std::map<std::string, Gender, std::less<>> names_;
};

// Everything the symbolic side reads, bundled. Immutable after load.
struct Lexicons {
  PronounTable standard = PronounTable::standard();
  PronounTable neopronouns;
  GenderLexicon genders;
  IndicatingVerbList indicating_verbs;
  Gazetteer names;

  static Lexicons builtin() {
    Lexicons lex;
    lex.neopronouns = PronounTable::from_tsv(builtin::kNeopronouns, true);
    lex.genders = GenderLexicon::from_tsv(builtin::kGenderNouns, "builtin");
    lex.indicating_verbs = IndicatingVerbList::from_lines(builtin::kIndicatingVerbs);
    lex.names = Gazetteer::from_tsv(builtin::kGivenNames);
    return lex;
  }

  // All entries for a surface, standard table first.
  std::vector<PronounEntry> entries(std::string_view surface) const {
    auto out = standard.lookup(surface);
    auto neo = neopronouns.lookup(surface);
    out.insert(out.end(), neo.begin(), neo.end());
    return out;
  }

  bool is_pronoun(std::string_view surface) const {
    return standard.contains(surface) || neopronouns.contains(surface);
  }
};

// Case-insensitive lookup across both tables; the first entry in table
// order wins for surfaces with several cases.
inline std::optional<PronounEntry> pronoun_info(std::string_view surface, const Lexicons& lex) {
  auto all = lex.entries(surface);
  if (all.empty()) return std::nullopt;
  return all.front();
}

inline Gender noun_gender(std::string_view lemma, const GenderLexicon& lexicon) {
  return lexicon.gender(lemma);
}

// Austere mode demands agreement: exact match, `either` entities accept
// masculine and feminine pronouns, and neutral pronouns accept any plural
// entity. Broad mode accepts everything.
inline bool gender_compatible(Gender pronoun_gender, Gender entity_gender, AgreementMode mode,
                              bool entity_plural = false) {
  if (mode == AgreementMode::broad) return true;
  if (pronoun_gender == Gender::neutral && entity_plural) return true;
  if (entity_gender == Gender::unknown || pronoun_gender == Gender::unknown) return false;
  if (pronoun_gender == entity_gender) return true;
  if (entity_gender == Gender::either) {
    return pronoun_gender == Gender::masculine || pronoun_gender == Gender::feminine;
  }
  return false;
}

// Cross-table invariants that single-file loaders cannot check.
inline std::vector<std::string> check_lexicons(const Lexicons& lex) {
  std::vector<std::string> problems;
  for (const auto& s : lex.neopronouns.surfaces()) {
    if (lex.standard.contains(s)) {
      problems.push_back("neopronoun '" + s + "' collides with a standard pronoun");
    }
  }
  for (const auto& e : lex.neopronouns.entries()) {
    if (!e.is_neopronoun) problems.push_back("neopronoun table entry not flagged: " + e.surface);
  }
  if (lex.indicating_verbs.lemmas().empty()) problems.push_back("indicating-verb list is empty");
  return problems;
}

}  // namespace pronounflow
