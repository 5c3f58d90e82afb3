#pragma once

// Pronoun detection and per-position masking.

#include <string>
#include <string_view>
#include <vector>

#include "pronounflow/conllu.hpp"
#include "pronounflow/error.hpp"
#include "pronounflow/lexicon.hpp"
#include "pronounflow/text.hpp"

namespace pronounflow {

inline constexpr std::string_view kMaskMarker = "<MASK>";

struct PronounOccurrence {
  std::string sentence_id;
  int token_index = 0;
  std::string surface;
  PronounEntry entry;
};

struct MaskedVariant {
  PronounOccurrence occurrence;
  std::string masked_text;
  std::string original_pronoun;
  std::size_t mask_offset = 0;  // byte offset of the marker in masked_text
  bool capitalize = false;      // replacement must start upper-case
};

// Picks the paradigm slot a token fills when its surface is ambiguous
// ("her" as object vs. possessive determiner).
inline PronounEntry resolve_entry(const Token& token, const std::vector<PronounEntry>& entries) {
  auto want = [&]() -> std::optional<PronounCase> {
    auto feat = [&](const char* k) {
      auto it = token.morph.find(k);
      return it == token.morph.end() ? std::string{} : it->second;
    };
    if (feat("Reflex") == "Yes") return PronounCase::reflexive;
    if (token.deprel == "nmod:poss" || token.deprel == "det:poss") {
      return PronounCase::possessive_determiner;
    }
    if (feat("Poss") == "Yes") {
      return token.deprel.rfind("nmod", 0) == 0 || token.deprel.rfind("det", 0) == 0
                 ? PronounCase::possessive_determiner
                 : PronounCase::possessive_pronoun;
    }
    if (token.deprel.rfind("nsubj", 0) == 0 || token.deprel.rfind("csubj", 0) == 0 ||
        feat("Case") == "Nom") {
      return PronounCase::subject;
    }
    if (token.deprel == "obj" || token.deprel == "iobj" || token.deprel.rfind("obl", 0) == 0 ||
        feat("Case") == "Acc") {
      return PronounCase::object;
    }
    return std::nullopt;
  }();
  if (want) {
    for (const auto& e : entries) {
      if (e.pronoun_case == *want) return e;
    }
  }
  return entries.front();
}

// One occurrence per personal/possessive/reflexive pronoun, in token order.
// Neopronouns are recognised by surface regardless of the upstream tag.
inline std::vector<PronounOccurrence> find_pronouns(const AnnotatedSentence& sentence,
                                                    const Lexicons& lex) {
  std::vector<PronounOccurrence> out;
  for (const auto& t : sentence.tokens) {
    std::vector<PronounEntry> entries;
    if (lex.neopronouns.contains(t.surface)) {
      entries = lex.neopronouns.lookup(t.surface);
    } else if (t.upos == "PRON" && lex.standard.contains(t.surface)) {
      entries = lex.standard.lookup(t.surface);
    } else {
      continue;
    }
    out.push_back({sentence.sentence_id, t.index, t.surface, resolve_entry(t, entries)});
  }
  return out;
}

inline bool is_sentence_initial(const AnnotatedSentence& sentence, int token_index) {
  for (int i = token_index - 1; i >= 1; --i) {
    const auto& prev = sentence.token(i);
    if (text::is_sentence_final(prev.surface)) return true;
    if (prev.upos != "PUNCT") return false;
  }
  return true;
}

inline MaskedVariant mask_sentence(const AnnotatedSentence& sentence,
                                   const PronounOccurrence& occ) {
  if (occ.sentence_id != sentence.sentence_id) {
    throw ContractViolation("occurrence from sentence '" + occ.sentence_id +
                            "' applied to sentence '" + sentence.sentence_id + "'");
  }
  if (occ.token_index < 1 || occ.token_index > static_cast<int>(sentence.size()) ||
      sentence.token(occ.token_index).surface != occ.surface) {
    throw ContractViolation("occurrence '" + occ.surface + "' at " +
                            std::to_string(occ.token_index) + " does not match sentence '" +
                            sentence.sentence_id + "'");
  }
  if (sentence.source_text.find(kMaskMarker) != std::string::npos) {
    throw ContractViolation("sentence text already contains the mask marker");
  }
  const auto& tok = sentence.token(occ.token_index);
  MaskedVariant v;
  v.occurrence = occ;
  v.original_pronoun = tok.surface;
  v.mask_offset = tok.begin;
  v.masked_text = sentence.source_text.substr(0, tok.begin);
  v.masked_text += kMaskMarker;
  v.masked_text += sentence.source_text.substr(tok.end);
  v.capitalize = text::starts_upper(tok.surface) || is_sentence_initial(sentence, tok.index);
  return v;
}

// Case a candidate pronoun for the masked slot.
inline std::string cased_pronoun(std::string_view pronoun, bool capitalize) {
  auto lower = text::to_lower(pronoun);
  return capitalize ? text::capitalize(lower) : lower;
}

// The masked text with its marker replaced by `pronoun`.
inline std::string fill_mask(const MaskedVariant& v, std::string_view pronoun) {
  std::string out = v.masked_text;
  out.replace(v.mask_offset, kMaskMarker.size(), pronoun);
  return out;
}

}  // namespace pronounflow
