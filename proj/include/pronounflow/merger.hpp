#pragma once

// Siamese sentences: every masked variant realised with every candidate the
// backend proposes for it. One position changes per Siamese sentence.

#include <future>
#include <string>
#include <vector>

#include "pronounflow/conllu.hpp"
#include "pronounflow/error.hpp"
#include "pronounflow/fillmask.hpp"
#include "pronounflow/identifier.hpp"

namespace pronounflow {

struct ScoreComponents {
  double winventor_value = 0.0;
  double model_score = 0.0;
  double aggregate = 0.0;
};

struct SiameseSentence {
  std::string parent_sentence_id;
  MaskedVariant variant;
  Prediction candidate;
  std::string realized_text;
  ScoreComponents scores;  // filled by the matcher

  int token_index() const { return variant.occurrence.token_index; }
};

struct SiameseBatch {
  std::vector<SiameseSentence> sentences;
  bool backend_failed = false;
  std::string diagnostic;
};

inline SiameseSentence make_siamese(const std::string& sentence_id, const MaskedVariant& variant,
                                    const Prediction& candidate) {
  SiameseSentence s;
  s.parent_sentence_id = sentence_id;
  s.variant = variant;
  s.candidate = candidate;
  s.candidate.pronoun = text::to_lower(candidate.pronoun);
  s.realized_text = fill_mask(variant, cased_pronoun(candidate.pronoun, variant.capitalize));
  s.scores.model_score = candidate.score;
  return s;
}

// Ordered by occurrence, then prediction rank, whatever order the backend
// calls complete in. Any transport failure fails the whole sentence.
inline SiameseBatch generate_siamese(const AnnotatedSentence& sentence,
                                     const std::vector<MaskedVariant>& variants,
                                     const FillMaskBackend& backend, int k,
                                     bool parallel = false) {
  for (const auto& v : variants) {
    if (v.occurrence.sentence_id != sentence.sentence_id) {
      throw ContractViolation("variant of '" + v.occurrence.sentence_id +
                              "' passed with sentence '" + sentence.sentence_id + "'");
    }
  }
  SiameseBatch batch;
  std::vector<std::vector<Prediction>> predictions(variants.size());
  try {
    if (parallel && variants.size() > 1) {
      std::vector<std::future<std::vector<Prediction>>> pending;
      pending.reserve(variants.size());
      for (const auto& v : variants) {
        pending.push_back(std::async(std::launch::async,
                                     [&backend, &v, k] { return backend.predict(v.masked_text, k); }));
      }
      // Drain every future before rethrowing so no task outlives `variants`.
      std::exception_ptr first_error;
      for (std::size_t i = 0; i < pending.size(); ++i) {
        try {
          predictions[i] = pending[i].get();
        } catch (...) {
          if (!first_error) first_error = std::current_exception();
        }
      }
      if (first_error) std::rethrow_exception(first_error);
    } else {
      for (std::size_t i = 0; i < variants.size(); ++i) {
        predictions[i] = backend.predict(variants[i].masked_text, k);
      }
    }
  } catch (const TransportError& e) {
    batch.backend_failed = true;
    batch.diagnostic = e.what();
    return batch;
  }
  for (std::size_t i = 0; i < variants.size(); ++i) {
    for (const auto& p : predictions[i]) {
      batch.sentences.push_back(make_siamese(sentence.sentence_id, variants[i], p));
    }
  }
  return batch;
}

}  // namespace pronounflow
