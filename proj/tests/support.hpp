#pragma once

#include <filesystem>
#include <string>

#include "pronounflow/conllu.hpp"
#include "pronounflow/evaluation.hpp"
#include "pronounflow/io.hpp"
#include "pronounflow/lexicon.hpp"

namespace pftest {

inline std::filesystem::path source_dir() { return PRONOUNFLOW_SOURCE_DIR; }
inline std::filesystem::path data_path(const std::string& rel) { return source_dir() / rel; }

inline const pronounflow::Lexicons& lexicons() {
  static const pronounflow::Lexicons lex = pronounflow::Lexicons::builtin();
  return lex;
}

inline pronounflow::Document load(const std::string& rel) {
  return pronounflow::load_conllu_file(data_path(rel), lexicons());
}

inline pronounflow::AnnotatedSentence load_one(const std::string& rel) { return load(rel).sentences.at(0); }

// 1-based index of the n-th (0-based) token with this surface.
inline int index_of(const pronounflow::AnnotatedSentence& s, const std::string& surface, int nth = 0) {
  for (const auto& t : s.tokens) {
    if (t.surface == surface && nth-- == 0) return t.index;
  }
  return 0;
}

// Flat sentence from space-separated words: token 1 is the root, every other
// token hangs off it. Standard and neo pronouns are tagged PRON, "." and ","
// PUNCT, everything else NOUN.
inline pronounflow::AnnotatedSentence tiny(const std::string& id, const std::string& words) {
  const auto& lex = lexicons();
  std::string body = "# sent_id = " + id + "\n# text = " + words + "\n";
  int i = 0;
  for (const auto& w : pronounflow::text::split(words, ' ')) {
    ++i;
    std::string upos = lex.is_pronoun(w) ? "PRON" : (w == "." || w == ",") ? "PUNCT" : "NOUN";
    body += std::to_string(i) + "\t" + w + "\t_\t" + upos + "\t_\t_\t" + (i == 1 ? "0" : "1") + "\t" +
            (i == 1 ? "root" : "dep") + "\t_\t_\n";
  }
  return pronounflow::parse_conllu(std::string_view(body)).sentences.at(0);
}

inline std::filesystem::path temp_path(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "pronounflow-tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace pftest
