#pragma once

// JSON-lines rendering of calibration reports. The record layout is
// described in docs/report-schema.md.

#include <string>

#include <nlohmann/json.hpp>

#include "pronounflow/conllu.hpp"
#include "pronounflow/matcher.hpp"

namespace pronounflow {

using ordered_json = nlohmann::ordered_json;

inline ordered_json to_json(const DependencyEdge& e) {
  return ordered_json{{"from", e.from}, {"to", e.to}, {"deprel", e.deprel}, {"upward", e.upward}};
}

inline ordered_json to_json(const AgreementFactors& f) {
  return ordered_json{{"number_agreement", f.number_agreement},
                      {"gender_agreement", f.gender_agreement},
                      {"pronoun_gender_agreement", f.pronoun_gender_agreement}};
}

inline ordered_json to_json(const MitkovScore& m) {
  return ordered_json{{"definiteness", m.definiteness},
                      {"indicating_verb", m.indicating_verb},
                      {"lexical_reiteration", m.lexical_reiteration},
                      {"non_prepositional", m.non_prepositional},
                      {"collocation", m.collocation},
                      {"total", m.total}};
}

inline ordered_json to_json(const ScoredPair& p, const AnnotatedSentence& s) {
  ordered_json path = ordered_json::array();
  for (const auto& e : p.pair.relation_path) path.push_back(to_json(e));
  return ordered_json{{"antecedent_index", p.pair.antecedent_index},
                      {"antecedent", s.token(p.pair.antecedent_index).surface},
                      {"antecedent_kind", to_string(p.pair.antecedent_kind)},
                      {"antecedent_gender", to_string(p.antecedent_gender)},
                      {"relation_path", std::move(path)},
                      {"factors", to_json(p.factors)},
                      {"mitkov", to_json(p.mitkov)},
                      {"value", p.value()}};
}

inline ordered_json to_json(const RankedCandidate& c, const AnnotatedSentence& s) {
  ordered_json pairs = ordered_json::array();
  for (const auto& p : c.assessment.pairs) pairs.push_back(to_json(p, s));
  const auto& sc = c.siamese.scores;
  return ordered_json{{"pronoun", c.siamese.candidate.pronoun},
                      {"realized_text", c.siamese.realized_text},
                      {"matched", c.assessment.matched},
                      {"winventor_value", sc.winventor_value},
                      {"model_score", sc.model_score},
                      {"aggregate", sc.aggregate},
                      {"pairs", std::move(pairs)}};
}

inline std::string decision_text(const RankedGroup& g) {
  const auto& w = g.winner();
  if (g.provenance == Provenance::winventor) {
    return "'" + w.siamese.candidate.pronoun + "' ranked first with a matched pair (winventor value " +
           nlohmann::json(w.siamese.scores.winventor_value).dump() + ")";
  }
  if (w.assessment.matched) {
    return "'" + w.siamese.candidate.pronoun + "' ranked first by model score";
  }
  return "no candidate paired with an antecedent; '" + w.siamese.candidate.pronoun +
         "' ranked first by model score";
}

// `explain` adds the full per-candidate trace.
inline ordered_json to_json(const CalibrationReport& r, const AnnotatedSentence& s, bool explain) {
  ordered_json j;
  j["record"] = "sentence";
  j["sentence_id"] = r.sentence_id;
  j["original_text"] = r.original_text;
  j["rewritten_text"] = r.rewritten_text;
  j["alternatives"] = r.alternatives;
  j["skipped_reason"] = r.skipped_reason ? ordered_json(std::string(to_string(*r.skipped_reason))) : ordered_json();
  if (!r.diagnostic.empty()) j["diagnostic"] = r.diagnostic;
  ordered_json decisions = ordered_json::array();
  for (const auto& g : r.groups) {
    const auto& w = g.winner();
    decisions.push_back(ordered_json{{"token_index", g.occurrence.token_index},
                                     {"original", g.occurrence.surface},
                                     {"winner", w.siamese.candidate.pronoun},
                                     {"provenance", to_string(g.provenance)},
                                     {"aggregate", w.siamese.scores.aggregate}});
  }
  j["decisions"] = std::move(decisions);
  if (explain) {
    ordered_json groups = ordered_json::array();
    for (const auto& g : r.groups) {
      ordered_json ranked = ordered_json::array();
      for (const auto& c : g.ranked) ranked.push_back(to_json(c, s));
      groups.push_back(ordered_json{{"token_index", g.occurrence.token_index},
                                    {"original", g.occurrence.surface},
                                    {"masked_text", g.winner().siamese.variant.masked_text},
                                    {"ranked", std::move(ranked)},
                                    {"decision", decision_text(g)}});
    }
    j["explanation"] = ordered_json{{"groups", std::move(groups)}};
  }
  return j;
}

}  // namespace pronounflow
