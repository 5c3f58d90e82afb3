#pragma once

// CoNLL-U ingestion. The pipeline consumes dependency parses produced by an
// external parser; this header turns them into the annotation model and back.

#include <charconv>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pronounflow/error.hpp"
#include "pronounflow/lexicon.hpp"
#include "pronounflow/text.hpp"

namespace pronounflow {

struct Token {
  int index = 0;  // 1-based
  std::string surface;
  std::string lemma = "_";
  std::string upos = "_";
  std::string xpos = "_";
  int head = 0;  // 0 = root
  std::string deprel = "_";
  std::optional<std::string> entity_tag;
  std::map<std::string, std::string> morph;

  // Raw columns kept verbatim so serialization round-trips.
  std::string feats = "_";
  std::string deps = "_";
  std::string misc = "_";

  bool space_after = true;
  bool entity_backfilled = false;
  // Byte span of the token inside the sentence's source_text.
  std::size_t begin = 0;
  std::size_t end = 0;
};

struct AnnotatedSentence {
  std::string sentence_id;
  std::vector<Token> tokens;
  std::string source_text;

  std::vector<std::string> comments;
  // Multiword-token and empty-node lines, keyed by the token index that
  // follows them in the file.
  std::vector<std::pair<int, std::string>> extra_lines;

  const Token& token(int index) const { return tokens.at(static_cast<std::size_t>(index - 1)); }
  std::size_t size() const { return tokens.size(); }

  std::vector<int> children(int index) const {
    std::vector<int> out;
    for (const auto& t : tokens) {
      if (t.head == index) out.push_back(t.index);
    }
    return out;
  }
};

struct Document {
  std::string doc_id;
  std::vector<AnnotatedSentence> sentences;
};

struct Diagnostic {
  std::string sentence_id;
  int token_index = 0;  // 0 for sentence-level rules
  std::string rule;
  std::string message;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

inline std::string effective_lemma(const Token& t) {
  return text::to_lower(t.lemma == "_" || t.lemma.empty() ? t.surface : t.lemma);
}

inline bool is_plural(const Token& t) {
  if (auto it = t.morph.find("Number"); it != t.morph.end()) return it->second == "Plur";
  if (t.xpos == "NNS" || t.xpos == "NNPS") return true;
  if (t.xpos == "NN" || t.xpos == "NNP") return false;
  auto lower = text::to_lower(t.surface);
  return t.upos == "NOUN" && lower != effective_lemma(t) && lower.size() > 1 &&
         lower.back() == 's';
}

// Joins surfaces honouring SpaceAfter=No.
inline std::string detokenize(const std::vector<Token>& tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    out += tokens[i].surface;
    if (i + 1 < tokens.size() && tokens[i].space_after) out += ' ';
  }
  return out;
}

namespace detail {

inline std::map<std::string, std::string> parse_features(std::string_view col) {
  std::map<std::string, std::string> out;
  if (col == "_" || col.empty()) return out;
  for (const auto& kv : text::split(col, '|')) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) {
      out[kv] = "";
    } else {
      out[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
  }
  return out;
}

inline std::optional<int> parse_int(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

// Sentence-level invariant checks shared by the parser (which throws on the
// first problem) and validate_document (which reports all of them).
inline std::vector<Diagnostic> check_sentence(const AnnotatedSentence& s) {
  std::vector<Diagnostic> out;
  const int n = static_cast<int>(s.tokens.size());
  auto add = [&](int idx, std::string rule, std::string msg) {
    out.push_back({s.sentence_id, idx, std::move(rule), std::move(msg)});
  };
  if (n == 0) {
    add(0, "non-empty", "sentence has no tokens");
    return out;
  }
  bool indices_ok = true;
  for (int i = 0; i < n; ++i) {
    if (s.tokens[static_cast<std::size_t>(i)].index != i + 1) {
      add(s.tokens[static_cast<std::size_t>(i)].index, "index-contiguity",
          "expected token index " + std::to_string(i + 1));
      indices_ok = false;
    }
  }
  int roots = 0;
  bool heads_ok = true;
  for (const auto& t : s.tokens) {
    if (t.head == 0) ++roots;
    if (t.head < 0 || t.head > n) {
      add(t.index, "head-range", "head " + std::to_string(t.head) + " is not a token index");
      heads_ok = false;
    } else if (t.head == t.index) {
      add(t.index, "cycle", "token is its own head");
      heads_ok = false;
    }
  }
  if (roots != 1) add(0, "single-root", "found " + std::to_string(roots) + " root tokens");
  if (indices_ok && heads_ok) {
    // Every token must reach the root; report each token that starts a
    // cycle once.
    std::set<int> reported;
    for (const auto& t : s.tokens) {
      int cur = t.index;
      for (int steps = 0; cur != 0 && steps <= n; ++steps) cur = s.token(cur).head;
      if (cur != 0 && !reported.count(t.index)) {
        std::set<int> members;
        int walk = t.index;
        while (!members.count(walk)) {
          members.insert(walk);
          walk = s.token(walk).head;
        }
        if (!reported.count(walk)) {
          add(walk, "cycle", "dependency cycle through token " + std::to_string(walk));
          int c = walk;
          do {
            reported.insert(c);
            c = s.token(c).head;
          } while (c != walk);
        }
      }
    }
  }
  // Tokens must align, in order, with the source text.
  std::size_t cursor = 0;
  for (const auto& t : s.tokens) {
    if (t.end < t.begin || t.begin < cursor || t.end > s.source_text.size() ||
        std::string_view(s.source_text).substr(t.begin, t.end - t.begin) != t.surface) {
      add(t.index, "text-alignment", "token '" + t.surface + "' does not align with source text");
      break;
    }
    cursor = t.end;
  }
  return out;
}

// Locates every token inside source_text, skipping whitespace between
// tokens. Returns false on the first token that cannot be matched.
inline bool align_tokens(AnnotatedSentence& s) {
  std::size_t cursor = 0;
  const auto& src = s.source_text;
  for (auto& t : s.tokens) {
    while (cursor < src.size() && std::isspace(static_cast<unsigned char>(src[cursor]))) ++cursor;
    if (src.compare(cursor, t.surface.size(), t.surface) != 0) return false;
    t.begin = cursor;
    t.end = cursor + t.surface.size();
    cursor = t.end;
  }
  return true;
}

inline const Gazetteer& builtin_gazetteer() {
  static const Gazetteer gaz = Gazetteer::from_tsv(builtin::kGivenNames);
  return gaz;
}

// PROPN tokens without an Entity= tag become PERSON when they are a known
// given name, follow a title, or sit in a name group with a given name.
inline void backfill_entities(AnnotatedSentence& s, const Gazetteer& gaz) {
  auto is_person_cue = [&](const Token& t) {
    return gaz.given_name(t.surface).has_value() || Gazetteer::title(t.surface).has_value();
  };
  for (auto& t : s.tokens) {
    if (t.entity_tag || t.upos != "PROPN" || Gazetteer::title(t.surface)) continue;
    bool person = gaz.given_name(t.surface).has_value();
    if (!person && t.index > 1) person = Gazetteer::title(s.token(t.index - 1).surface).has_value();
    if (!person) {
      for (const auto& other : s.tokens) {
        bool same_group = (other.head == t.index || t.head == other.index) &&
                          (other.deprel == "flat" || other.deprel == "compound" ||
                           t.deprel == "flat" || t.deprel == "compound");
        if (same_group && other.upos == "PROPN" && is_person_cue(other)) {
          person = true;
          break;
        }
      }
    }
    if (person) {
      t.entity_tag = "PERSON";
      t.entity_backfilled = true;
    }
  }
}

}  // namespace detail

struct ParseOptions {
  std::string doc_id = "doc";
  bool backfill_entities = true;
  const Gazetteer* gazetteer = nullptr;  // nullptr = built-in names
};

// Reads a CoNLL-U stream. Throws FormatError (with line number) on malformed
// lines and StructureError (with sentence id) on invalid trees.
inline Document parse_conllu(std::istream& in, const ParseOptions& options = {}) {
  Document doc;
  doc.doc_id = options.doc_id;
  const Gazetteer& gaz = options.gazetteer ? *options.gazetteer : detail::builtin_gazetteer();

  AnnotatedSentence cur;
  bool have_text = false;
  bool in_block = false;
  std::set<std::string> seen_ids;
  std::size_t line_no = 0;

  auto finish = [&]() {
    if (!in_block) return;
    if (cur.sentence_id.empty()) {
      cur.sentence_id = doc.doc_id + "-" + std::to_string(doc.sentences.size() + 1);
    }
    if (cur.tokens.empty()) throw StructureError(cur.sentence_id, "sentence has no tokens");
    if (!seen_ids.insert(cur.sentence_id).second) {
      throw StructureError(cur.sentence_id, "duplicate sentence id");
    }
    const int n = static_cast<int>(cur.tokens.size());
    for (const auto& t : cur.tokens) {
      if (t.head < 0 || t.head > n) {
        throw StructureError(cur.sentence_id, "dangling head " + std::to_string(t.head) +
                                                  " on token " + std::to_string(t.index));
      }
    }
    if (!have_text) cur.source_text = detokenize(cur.tokens);
    if (!detail::align_tokens(cur)) {
      throw StructureError(cur.sentence_id, "tokens do not align with '# text'");
    }
    if (auto diags = detail::check_sentence(cur); !diags.empty()) {
      const auto& d = diags.front();
      throw StructureError(cur.sentence_id, d.rule + " (token " + std::to_string(d.token_index) +
                                                "): " + d.message);
    }
    if (options.backfill_entities) detail::backfill_entities(cur, gaz);
    doc.sentences.push_back(std::move(cur));
    cur = AnnotatedSentence{};
    have_text = false;
    in_block = false;
  };

  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      finish();
      continue;
    }
    in_block = true;
    if (line.front() == '#') {
      cur.comments.push_back(line);
      auto body = text::trim(std::string_view(line).substr(1));
      auto take = [&](std::string_view key) -> std::optional<std::string> {
        if (body.substr(0, key.size()) != key) return std::nullopt;
        auto rest = text::trim(body.substr(key.size()));
        if (rest.empty() || rest.front() != '=') return std::nullopt;
        return std::string(text::trim(rest.substr(1)));
      };
      if (auto id = take("sent_id")) cur.sentence_id = *id;
      if (auto t = take("text")) {
        // Keep the text exactly as written after "# text = ".
        auto pos = line.find('=');
        std::string_view raw = std::string_view(line).substr(pos + 1);
        if (!raw.empty() && raw.front() == ' ') raw.remove_prefix(1);
        cur.source_text = std::string(raw);
        have_text = true;
      }
      continue;
    }
    auto cols = text::split(line, '\t');
    if (cols.size() != 10) {
      throw FormatError("expected 10 tab-separated columns, found " + std::to_string(cols.size()),
                        line_no);
    }
    if (cols[0].find('-') != std::string::npos || cols[0].find('.') != std::string::npos) {
      cur.extra_lines.emplace_back(static_cast<int>(cur.tokens.size()) + 1, line);
      continue;
    }
    auto idx = detail::parse_int(cols[0]);
    if (!idx || *idx < 1) throw FormatError("bad token id '" + cols[0] + "'", line_no);
    auto head = detail::parse_int(cols[6]);
    if (!head) throw FormatError("bad head '" + cols[6] + "'", line_no);

    Token t;
    t.index = *idx;
    t.surface = cols[1];
    t.lemma = cols[2];
    t.upos = cols[3];
    t.xpos = cols[4];
    t.feats = cols[5];
    t.morph = detail::parse_features(cols[5]);
    t.head = *head;
    t.deprel = cols[7];
    t.deps = cols[8];
    t.misc = cols[9];
    auto misc = detail::parse_features(cols[9]);
    if (auto it = misc.find("Entity"); it != misc.end() && !it->second.empty()) {
      t.entity_tag = it->second;
    }
    if (auto it = misc.find("SpaceAfter"); it != misc.end() && it->second == "No") {
      t.space_after = false;
    }
    cur.tokens.push_back(std::move(t));
  }
  finish();
  return doc;
}

inline Document parse_conllu(std::string_view input, const ParseOptions& options = {}) {
  std::istringstream in{std::string(input)};
  return parse_conllu(in, options);
}

inline void serialize_conllu(const Document& doc, std::ostream& out) {
  for (const auto& s : doc.sentences) {
    for (const auto& c : s.comments) out << c << '\n';
    std::size_t extra = 0;
    for (const auto& t : s.tokens) {
      while (extra < s.extra_lines.size() && s.extra_lines[extra].first <= t.index) {
        out << s.extra_lines[extra++].second << '\n';
      }
      out << t.index << '\t' << t.surface << '\t' << t.lemma << '\t' << t.upos << '\t' << t.xpos
          << '\t' << t.feats << '\t' << t.head << '\t' << t.deprel << '\t' << t.deps << '\t'
          << t.misc << '\n';
    }
    for (; extra < s.extra_lines.size(); ++extra) out << s.extra_lines[extra].second << '\n';
    out << '\n';
  }
}

inline std::string serialize_conllu(const Document& doc) {
  std::ostringstream out;
  serialize_conllu(doc, out);
  return out.str();
}

// Empty iff every annotation invariant holds.
inline std::vector<Diagnostic> validate_document(const Document& doc) {
  std::vector<Diagnostic> out;
  std::set<std::string> ids;
  for (const auto& s : doc.sentences) {
    if (!ids.insert(s.sentence_id).second) {
      out.push_back({s.sentence_id, 0, "unique-sentence-id", "sentence id used more than once"});
    }
    auto d = detail::check_sentence(s);
    out.insert(out.end(), d.begin(), d.end());
  }
  return out;
}

}  // namespace pronounflow
