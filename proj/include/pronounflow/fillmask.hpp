#pragma once

// The neural side of the pipeline, behind one interface: given a sentence
// with a single mask marker, return the top-k candidate pronouns.
//
// Backends:
//   FixtureBackend  - table-driven, for golden tests.
//   BaselineBackend - deterministic frequency/case heuristic, offline.
//   RemoteBackend   - HTTP client for a model server (remote_backend.hpp).

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "pronounflow/error.hpp"
#include "pronounflow/identifier.hpp"
#include "pronounflow/lexicon.hpp"
#include "pronounflow/text.hpp"

namespace pronounflow {

struct Prediction {
  std::string pronoun;
  double score = 0.0;

  friend bool operator==(const Prediction&, const Prediction&) = default;
};

enum class BackendKind { remote, baseline, fixture };

inline std::string_view to_string(BackendKind k) {
  switch (k) {
    case BackendKind::remote: return "remote";
    case BackendKind::baseline: return "baseline";
    case BackendKind::fixture: return "fixture";
  }
  return "?";
}

struct BackendDescriptor {
  std::string name;
  std::set<std::string> supported_pronouns;
  BackendKind kind = BackendKind::fixture;
};

inline std::size_t count_markers(std::string_view s) {
  std::size_t n = 0;
  for (auto pos = s.find(kMaskMarker); pos != std::string_view::npos;
       pos = s.find(kMaskMarker, pos + kMaskMarker.size())) {
    ++n;
  }
  return n;
}

inline void check_predict_args(std::string_view masked_text, int k) {
  if (k < 1) throw ContractViolation("top_k must be >= 1");
  if (count_markers(masked_text) != 1) {
    throw ContractViolation("masked text must contain exactly one " + std::string(kMaskMarker));
  }
}

// Case-folds, drops pronouns outside `supported`, clamps scores to [0,1],
// keeps the best score per pronoun, orders by score (ties lexicographic)
// and truncates to k.
inline std::vector<Prediction> finalize_predictions(std::vector<Prediction> raw,
                                                    const std::set<std::string>& supported,
                                                    int k) {
  std::map<std::string, double> best;
  for (auto& p : raw) {
    auto key = text::to_lower(p.pronoun);
    if (!supported.count(key)) continue;
    double s = std::isfinite(p.score) ? std::clamp(p.score, 0.0, 1.0) : 0.0;
    auto [it, inserted] = best.emplace(key, s);
    if (!inserted) it->second = std::max(it->second, s);
  }
  std::vector<Prediction> out;
  out.reserve(best.size());
  for (auto& [p, s] : best) out.push_back({p, s});
  std::stable_sort(out.begin(), out.end(), [](const Prediction& a, const Prediction& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.pronoun < b.pronoun;
  });
  if (out.size() > static_cast<std::size_t>(k)) out.resize(static_cast<std::size_t>(k));
  return out;
}

class FillMaskBackend {
 public:
  virtual ~FillMaskBackend() = default;

  virtual const BackendDescriptor& descriptor() const = 0;

  // Ordered by descending score; at most k entries, all supported. The
  // backend never sees the original pronoun.
  virtual std::vector<Prediction> predict(std::string_view masked_text, int k) const = 0;

  bool supports(std::string_view pronoun) const {
    return descriptor().supported_pronouns.count(text::to_lower(pronoun)) > 0;
  }
};

class FixtureBackend final : public FillMaskBackend {
 public:
  using Table = std::map<std::string, std::vector<Prediction>, std::less<>>;

  FixtureBackend(std::string name, std::set<std::string> supported, Table table,
                 std::vector<Prediction> fallback = {})
      : table_(std::move(table)), fallback_(std::move(fallback)) {
    desc_.name = std::move(name);
    desc_.kind = BackendKind::fixture;
    for (const auto& s : supported) desc_.supported_pronouns.insert(text::to_lower(s));
    if (desc_.supported_pronouns.empty()) {
      for (const auto& [_, preds] : table_) {
        for (const auto& p : preds) desc_.supported_pronouns.insert(text::to_lower(p.pronoun));
      }
      for (const auto& p : fallback_) desc_.supported_pronouns.insert(text::to_lower(p.pronoun));
    }
    if (desc_.supported_pronouns.empty()) throw ConfigError("fixture supports no pronouns");
    auto check = [&](const std::vector<Prediction>& preds) {
      for (const auto& p : preds) {
        if (!supports(p.pronoun)) {
          throw ConfigError("fixture prediction '" + p.pronoun + "' is not in its supported set");
        }
        if (!(p.score >= 0.0 && p.score <= 1.0)) {
          throw ConfigError("fixture score for '" + p.pronoun + "' outside [0,1]");
        }
      }
    };
    for (const auto& [text_key, preds] : table_) {
      if (count_markers(text_key) != 1) {
        throw ConfigError("fixture text lacks a single mask marker: " + text_key);
      }
      check(preds);
    }
    check(fallback_);
  }

  // {"name": ..., "supported": [...], "entries": [{"text": ...,
  //  "predictions": [{"token": ..., "score": ...}]}], "default": [...]}
  static FixtureBackend from_json(const nlohmann::json& j) {
    auto preds = [](const nlohmann::json& arr) {
      std::vector<Prediction> out;
      for (const auto& p : arr) out.push_back({p.at("token").get<std::string>(), p.at("score").get<double>()});
      return out;
    };
    try {
      Table table;
      for (const auto& e : j.at("entries")) {
        table[e.at("text").get<std::string>()] = preds(e.at("predictions"));
      }
      std::set<std::string> supported;
      if (j.contains("supported")) supported = j.at("supported").get<std::set<std::string>>();
      std::vector<Prediction> fallback;
      if (j.contains("default")) fallback = preds(j.at("default"));
      return FixtureBackend(j.value("name", std::string("fixture")), std::move(supported),
                            std::move(table), std::move(fallback));
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError(std::string("bad fixture file: ") + e.what());
    }
  }

  nlohmann::ordered_json to_json() const {
    auto preds = [](const std::vector<Prediction>& v) {
      auto arr = nlohmann::ordered_json::array();
      for (const auto& p : v) arr.push_back({{"token", p.pronoun}, {"score", p.score}});
      return arr;
    };
    nlohmann::ordered_json j;
    j["name"] = desc_.name;
    j["supported"] = desc_.supported_pronouns;
    j["entries"] = nlohmann::ordered_json::array();
    for (const auto& [t, p] : table_) j["entries"].push_back({{"text", t}, {"predictions", preds(p)}});
    if (!fallback_.empty()) j["default"] = preds(fallback_);
    return j;
  }

  const BackendDescriptor& descriptor() const override { return desc_; }

  std::vector<Prediction> predict(std::string_view masked_text, int k) const override {
    check_predict_args(masked_text, k);
    if (auto it = table_.find(masked_text); it != table_.end()) {
      return finalize_predictions(it->second, desc_.supported_pronouns, k);
    }
    if (!fallback_.empty()) return finalize_predictions(fallback_, desc_.supported_pronouns, k);
    throw TransportError("fixture '" + desc_.name + "' has no entry for: " + std::string(masked_text));
  }

  const Table& table() const { return table_; }

 private:
  BackendDescriptor desc_;
  Table table_;
  std::vector<Prediction> fallback_;
};

// Deterministic offline stand-in for a language model. The slot class is
// guessed from the words around the marker:
//   marker before a content word           -> possessive determiners first
//   marker before a verb, or clause-initial -> subject pronouns first
//   otherwise                               -> object pronouns first
// Within the preferred class pronouns follow corpus frequency.
class BaselineBackend final : public FillMaskBackend {
 public:
  using FrequencyTable = std::map<std::string, double>;

  // Rough relative frequencies of third-person pronouns in English prose.
  static FrequencyTable default_frequencies() {
    return {{"it", 9500},      {"he", 7200},     {"his", 5300},    {"her", 4800},
            {"they", 4700},    {"she", 4200},    {"their", 2900},  {"them", 2300},
            {"him", 2100},     {"its", 1700},    {"himself", 450}, {"themselves", 350},
            {"herself", 300},  {"itself", 250},  {"hers", 40},     {"theirs", 30}};
  }

  explicit BaselineBackend(FrequencyTable freq = default_frequencies(),
                           PronounTable table = PronounTable::standard())
      : freq_(std::move(freq)), table_(std::move(table)) {
    desc_.name = "baseline-frequency";
    desc_.kind = BackendKind::baseline;
    for (const auto& [p, f] : freq_) {
      if (!(f > 0)) throw ConfigError("baseline frequency must be positive: " + p);
      if (!table_.contains(p)) throw ConfigError("baseline pronoun not in table: " + p);
      desc_.supported_pronouns.insert(text::to_lower(p));
    }
    if (desc_.supported_pronouns.empty()) throw ConfigError("baseline supports no pronouns");
  }

  const BackendDescriptor& descriptor() const override { return desc_; }

  static PronounCase slot_class(std::string_view masked_text) {
    auto words = split_words(masked_text);
    std::size_t at = 0;
    while (at < words.size() && words[at] != kMaskMarker) ++at;
    std::string prev = at > 0 ? text::to_lower(words[at - 1]) : std::string{};
    std::string next = at + 1 < words.size() ? text::to_lower(words[at + 1]) : std::string{};
    const bool boundary = prev.empty() || clause_openers().count(prev) > 0;
    const bool alpha = !next.empty() && std::all_of(next.begin(), next.end(), [](unsigned char c) {
      return std::isalpha(c) || c == '-' || c == '\'';
    });
    if (verb_cues().count(next) || (boundary && alpha && ends_with(next, "ed"))) {
      return PronounCase::subject;
    }
    if (alpha && !function_words().count(next)) return PronounCase::possessive_determiner;
    if (boundary) return PronounCase::subject;
    return PronounCase::object;
  }

  std::vector<Prediction> predict(std::string_view masked_text, int k) const override {
    check_predict_args(masked_text, k);
    const auto wanted = slot_class(masked_text);
    std::vector<Prediction> raw;
    double total = 0;
    for (const auto& [p, f] : freq_) {
      bool preferred = false;
      for (const auto& e : table_.lookup(p)) preferred |= e.pronoun_case == wanted;
      double w = f * (preferred ? kPreferredBoost : 1.0);
      raw.push_back({p, w});
      total += w;
    }
    for (auto& p : raw) p.score /= total;
    return finalize_predictions(std::move(raw), desc_.supported_pronouns, k);
  }

 private:
  static constexpr double kPreferredBoost = 10.0;

  static bool ends_with(std::string_view s, std::string_view suffix) {
    return s.size() > suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
  }

  // Whitespace split with punctuation peeled off word edges; the marker is
  // kept whole.
  static std::vector<std::string> split_words(std::string_view s) {
    std::vector<std::string> out;
    auto is_punct = [](char c) { return std::string_view(".,;:!?\"()[]").find(c) != std::string_view::npos; };
    for (const auto& chunk : text::split(s, ' ')) {
      std::string_view w = chunk;
      std::vector<std::string> tail;
      while (!w.empty() && is_punct(w.front())) {
        out.emplace_back(1, w.front());
        w.remove_prefix(1);
      }
      while (!w.empty() && is_punct(w.back())) {
        tail.emplace_back(1, w.back());
        w.remove_suffix(1);
      }
      if (auto m = w.find(kMaskMarker); m != std::string_view::npos && w != kMaskMarker) {
        if (m > 0) out.emplace_back(w.substr(0, m));
        out.emplace_back(kMaskMarker);
        if (m + kMaskMarker.size() < w.size()) out.emplace_back(w.substr(m + kMaskMarker.size()));
      } else if (!w.empty()) {
        out.emplace_back(w);
      }
      out.insert(out.end(), tail.rbegin(), tail.rend());
    }
    return out;
  }

  static const std::set<std::string, std::less<>>& verb_cues() {
    static const std::set<std::string, std::less<>> s{
        "is", "are", "was", "were", "am", "be", "been", "has", "have", "had", "do", "does", "did",
        "will", "would", "can", "could", "shall", "should", "may", "might", "must", "'s", "'re",
        "'d", "'ll", "said", "says", "went", "goes", "came", "comes", "looked", "looks", "saw",
        "sees", "loved", "loves", "liked", "likes", "wanted", "wants", "needed", "needs",
        "thought", "thinks", "knew", "knows", "felt", "feels", "got", "gets", "made", "makes",
        "took", "takes", "gave", "gives", "told", "tells", "asked", "asks", "called", "calls",
        "tried", "tries", "found", "finds", "kept", "keeps", "left", "leaves", "seemed", "seems",
        "became", "becomes", "ran", "runs", "walked", "walks", "grew", "grows", "returned",
        "returns", "spoke", "speaks", "feared", "fears", "wrote", "writes", "won", "lost"};
    return s;
  }

  static const std::set<std::string, std::less<>>& function_words() {
    static const std::set<std::string, std::less<>> s{
        "to", "of", "in", "on", "at", "with", "from", "by", "for", "about", "into", "over",
        "under", "after", "before", "through", "during", "without", "against", "between", "up",
        "down", "out", "off", "again", "too", "very", "so", "and", "or", "but", "because", "that",
        "which", "who", "when", "while", "if", "than", "as", "the", "a", "an", "this", "these",
        "those", "not", "never", "also", "still", "just", "all", "both", "each", "here", "there",
        "now", "then", "back", "away", "home", "today", "tomorrow", "yesterday", "anymore"};
    return s;
  }

  static const std::set<std::string, std::less<>>& clause_openers() {
    static const std::set<std::string, std::less<>> s{
        ".", "!", "?", ",", ";", ":", "and", "but", "or", "because", "that", "when", "while",
        "if", "although", "though", "since", "until", "so", "as", "before", "after", "where",
        "whereas", "unless", "once"};
    return s;
  }

  BackendDescriptor desc_;
  FrequencyTable freq_;
  PronounTable table_;
};

}  // namespace pronounflow
