#pragma once

// Ranking of Siamese groups and assembly of the calibrated sentence.
//
// aggregate = winventor_value + model_weight * model_score, where an
// unmatched Siamese carries the no-match penalty as its winventor value.
// With the default penalty (-60) any matched candidate (value >= -2)
// outranks any unmatched one.

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "pronounflow/conllu.hpp"
#include "pronounflow/error.hpp"
#include "pronounflow/fillmask.hpp"
#include "pronounflow/identifier.hpp"
#include "pronounflow/lexicon.hpp"
#include "pronounflow/merger.hpp"
#include "pronounflow/winventor.hpp"

namespace pronounflow {

struct MatcherConfig {
  double no_match_penalty = kDefaultNoMatchPenalty;
  double model_weight = 1.0;
  bool symbolic_first = true;
  int top_k = 2;
  int results_per_sentence = 1;
};

enum class Provenance { winventor, model };

inline std::string_view to_string(Provenance p) {
  return p == Provenance::winventor ? "winventor" : "model";
}

enum class SkipReason { no_pronouns, rejected_unsupported, backend_failed };

inline std::string_view to_string(SkipReason r) {
  switch (r) {
    case SkipReason::no_pronouns: return "no-pronouns";
    case SkipReason::rejected_unsupported: return "rejected-unsupported";
    case SkipReason::backend_failed: return "backend-failed";
  }
  return "?";
}

struct RankedCandidate {
  SiameseSentence siamese;
  WinventorAssessment assessment;
};

struct RankedGroup {
  PronounOccurrence occurrence;
  std::vector<RankedCandidate> ranked;
  Provenance provenance = Provenance::model;

  const RankedCandidate& winner() const { return ranked.front(); }
};

struct CalibrationReport {
  std::string sentence_id;
  std::string original_text;
  std::string rewritten_text;
  // Further rewrites, best first, when more than one result is requested.
  std::vector<std::string> alternatives;
  std::vector<RankedGroup> groups;
  std::optional<SkipReason> skipped_reason;
  std::string diagnostic;
};

inline double aggregate_score(SiameseSentence& siamese, const WinventorAssessment& assessment,
                              const MatcherConfig& config) {
  auto& sc = siamese.scores;
  sc.winventor_value = assessment.matched ? assessment.winventor_value : config.no_match_penalty;
  sc.model_score = siamese.candidate.score;
  sc.aggregate = sc.winventor_value + config.model_weight * sc.model_score;
  return sc.aggregate;
}

// Expects aggregates already computed.
inline RankedGroup rank_group(std::vector<RankedCandidate> group, const MatcherConfig& config) {
  if (group.empty()) throw ContractViolation("cannot rank an empty Siamese group");
  const auto& first = group.front().siamese;
  for (const auto& c : group) {
    if (c.siamese.parent_sentence_id != first.parent_sentence_id ||
        c.siamese.token_index() != first.token_index()) {
      throw ContractViolation("Siamese group mixes pronoun occurrences");
    }
  }
  auto by_aggregate = [](const RankedCandidate& a, const RankedCandidate& b) {
    const auto& x = a.siamese.scores;
    const auto& y = b.siamese.scores;
    if (x.aggregate != y.aggregate) return x.aggregate > y.aggregate;
    if (x.model_score != y.model_score) return x.model_score > y.model_score;
    return a.siamese.candidate.pronoun < b.siamese.candidate.pronoun;
  };
  auto by_model = [](const RankedCandidate& a, const RankedCandidate& b) {
    const auto& x = a.siamese.scores;
    const auto& y = b.siamese.scores;
    if (x.model_score != y.model_score) return x.model_score > y.model_score;
    if (x.aggregate != y.aggregate) return x.aggregate > y.aggregate;
    return a.siamese.candidate.pronoun < b.siamese.candidate.pronoun;
  };
  if (config.symbolic_first) {
    std::stable_sort(group.begin(), group.end(), by_aggregate);
  } else {
    std::stable_sort(group.begin(), group.end(), by_model);
  }
  RankedGroup out;
  out.occurrence = group.front().siamese.variant.occurrence;
  out.provenance = config.symbolic_first && group.front().assessment.matched ? Provenance::winventor
                                                                             : Provenance::model;
  out.ranked = std::move(group);
  return out;
}

struct Pipeline {
  const Lexicons& lexicons;
  const FillMaskBackend& backend;
  WinventorOptions winventor;
  MatcherConfig matcher;
  bool parallel_predictions = false;
};

// Substitutes one chosen candidate per group into the original text.
inline std::string apply_choices(const AnnotatedSentence& s, const std::vector<RankedGroup>& groups,
                                 const std::vector<std::size_t>& choice) {
  std::vector<std::pair<const Token*, std::string>> edits;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    const auto& cand = groups[g].ranked[choice[g]].siamese;
    edits.emplace_back(&s.token(cand.token_index()),
                       cased_pronoun(cand.candidate.pronoun, cand.variant.capitalize));
  }
  std::sort(edits.begin(), edits.end(), [](const auto& a, const auto& b) { return a.first->begin > b.first->begin; });
  std::string out = s.source_text;
  for (const auto& [tok, replacement] : edits) out.replace(tok->begin, tok->end - tok->begin, replacement);
  return out;
}

// Best `n` combinations of per-group choices under the sum of each
// group's ranking key, best first.
inline std::vector<std::vector<std::size_t>> best_combinations(const std::vector<RankedGroup>& groups, int n,
                                                               bool symbolic_first) {
  auto key = [&](std::size_t g, std::size_t i) {
    const auto& sc = groups[g].ranked[i].siamese.scores;
    return symbolic_first ? sc.aggregate : sc.model_score;
  };
  auto total = [&](const std::vector<std::size_t>& c) {
    double t = 0;
    for (std::size_t g = 0; g < c.size(); ++g) t += key(g, c[g]);
    return t;
  };
  using Item = std::pair<double, std::vector<std::size_t>>;
  auto worse = [](const Item& a, const Item& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second > b.second;
  };
  std::priority_queue<Item, std::vector<Item>, decltype(worse)> frontier(worse);
  std::set<std::vector<std::size_t>> seen;
  std::vector<std::size_t> start(groups.size(), 0);
  frontier.push({total(start), start});
  seen.insert(start);
  std::vector<std::vector<std::size_t>> out;
  while (!frontier.empty() && static_cast<int>(out.size()) < n) {
    auto [score, combo] = frontier.top();
    frontier.pop();
    out.push_back(combo);
    for (std::size_t g = 0; g < combo.size(); ++g) {
      if (combo[g] + 1 >= groups[g].ranked.size()) continue;
      auto next = combo;
      ++next[g];
      if (seen.insert(next).second) frontier.push({total(next), next});
    }
  }
  return out;
}

// Identifier -> fill-mask -> merger -> winventor -> ranking for one sentence.
inline CalibrationReport calibrate_sentence(const AnnotatedSentence& s, const Pipeline& p,
                                            const DocumentContext& ctx) {
  CalibrationReport report;
  report.sentence_id = s.sentence_id;
  report.original_text = s.source_text;
  report.rewritten_text = s.source_text;

  auto occurrences = find_pronouns(s, p.lexicons);
  if (occurrences.empty()) {
    report.skipped_reason = SkipReason::no_pronouns;
    return report;
  }
  // Neopronouns are what gets replaced, so only standard pronouns must be
  // inside the backend's vocabulary.
  try {
    std::vector<std::string> unsupported;
    for (const auto& occ : occurrences) {
      if (!occ.entry.is_neopronoun && !p.backend.supports(occ.surface)) unsupported.push_back(occ.surface);
    }
    if (!unsupported.empty()) {
      report.skipped_reason = SkipReason::rejected_unsupported;
      report.diagnostic = "unsupported pronoun(s):";
      for (const auto& u : unsupported) report.diagnostic += " " + u;
      return report;
    }
  } catch (const TransportError& e) {
    report.skipped_reason = SkipReason::backend_failed;
    report.diagnostic = e.what();
    return report;
  }

  std::vector<MaskedVariant> variants;
  variants.reserve(occurrences.size());
  for (const auto& occ : occurrences) variants.push_back(mask_sentence(s, occ));

  auto batch = generate_siamese(s, variants, p.backend, p.matcher.top_k, p.parallel_predictions);
  if (batch.backend_failed) {
    report.skipped_reason = SkipReason::backend_failed;
    report.diagnostic = batch.diagnostic;
    return report;
  }

  WinventorOptions wopts = p.winventor;
  wopts.no_match_penalty = p.matcher.no_match_penalty;
  std::map<int, std::vector<RankedCandidate>> by_position;
  for (auto& siamese : batch.sentences) {
    RankedCandidate rc{std::move(siamese), {}};
    rc.assessment = assess(s, rc.siamese, p.lexicons, ctx, wopts);
    aggregate_score(rc.siamese, rc.assessment, p.matcher);
    by_position[rc.siamese.token_index()].push_back(std::move(rc));
  }
  for (auto& [_, group] : by_position) report.groups.push_back(rank_group(std::move(group), p.matcher));

  auto combos = best_combinations(report.groups, std::max(1, p.matcher.results_per_sentence),
                                  p.matcher.symbolic_first);
  report.rewritten_text = apply_choices(s, report.groups, combos.front());
  for (std::size_t i = 1; i < combos.size(); ++i) {
    report.alternatives.push_back(apply_choices(s, report.groups, combos[i]));
  }
  return report;
}

inline CalibrationReport calibrate_sentence(const AnnotatedSentence& s, const Pipeline& p) {
  return calibrate_sentence(s, p, DocumentContext(s));
}

// Reports in sentence order; `workers` > 1 spreads sentences over threads.
inline std::vector<CalibrationReport> calibrate_document(const Document& doc, const Pipeline& p,
                                                         unsigned workers = 1) {
  const DocumentContext ctx(doc);
  std::vector<CalibrationReport> reports(doc.sentences.size());
  if (workers <= 1 || doc.sentences.size() < 2) {
    for (std::size_t i = 0; i < doc.sentences.size(); ++i) reports[i] = calibrate_sentence(doc.sentences[i], p, ctx);
    return reports;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < std::min<std::size_t>(workers, doc.sentences.size()); ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < doc.sentences.size(); i = next++) {
          try {
            reports[i] = calibrate_sentence(doc.sentences[i], p, ctx);
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
          }
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
  return reports;
}

}  // namespace pronounflow
