// Copyright 2026 The convseg Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CONVSEG_TEXTPROC_HPP_
#define CONVSEG_TEXTPROC_HPP_

#include <algorithm>
#include <array>
#include <cctype>
#include <cstddef>
#include <fstream>
#include <istream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "convseg/error.hpp"
#include "convseg/lexicon_data.hpp"

namespace convseg {

// All offsets are byte offsets into UTF-8 text. Bytes >= 0x80 count as word
// characters.

inline bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

inline bool is_digit(char c) { return c >= '0' && c <= '9'; }

inline bool is_punct(char c) {
  const auto u = static_cast<unsigned char>(c);
  return u < 0x80 && std::ispunct(u);
}

inline bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }

inline char to_lower(char c) { return is_upper(c) ? static_cast<char>(c + 32) : c; }

inline std::string to_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = to_lower(c);
  return out;
}

inline std::string_view trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && is_space(s[b])) ++b;
  while (e > b && is_space(s[e - 1])) --e;
  return s.substr(b, e - b);
}

enum class TokenKind { kWord, kNumber, kPunctuation };

struct Token {
  std::string text;
  std::size_t start = 0;
  std::size_t end = 0;
  TokenKind kind = TokenKind::kWord;

  bool operator==(const Token&) const = default;
};

namespace detail {

// Digits with at most one internal '.' between digit runs.
inline bool is_number(std::string_view s) {
  if (s.empty() || !is_digit(s.front()) || !is_digit(s.back())) return false;
  int dots = 0;
  for (char c : s) {
    if (c == '.') {
      if (++dots > 1) return false;
    } else if (!is_digit(c)) {
      return false;
    }
  }
  return true;
}

inline void emit(std::vector<Token>& out, std::string_view text,
                 std::size_t start, std::size_t end, TokenKind kind) {
  out.push_back(Token{std::string(text.substr(start, end - start)), start, end,
                      kind});
}

inline void tokenize_core(std::vector<Token>& out, std::string_view text,
                          std::size_t start, std::size_t end) {
  std::string_view core = text.substr(start, end - start);
  if (is_number(core)) {
    emit(out, text, start, end, TokenKind::kNumber);
    return;
  }
  // Numeric ranges such as "10-15".
  if (std::size_t dash = core.find('-');
      dash != std::string_view::npos && is_number(core.substr(0, dash)) &&
      is_number(core.substr(dash + 1))) {
    emit(out, text, start, start + dash, TokenKind::kNumber);
    emit(out, text, start + dash, start + dash + 1, TokenKind::kPunctuation);
    emit(out, text, start + dash + 1, end, TokenKind::kNumber);
    return;
  }
  emit(out, text, start, end, TokenKind::kWord);
}

}  // namespace detail

// Whitespace split, then leading and trailing punctuation peeled off one
// character at a time.
inline std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    while (i < n && is_space(text[i])) ++i;
    if (i == n) break;
    std::size_t chunk_end = i;
    while (chunk_end < n && !is_space(text[chunk_end])) ++chunk_end;

    std::size_t core_begin = i;
    while (core_begin < chunk_end && is_punct(text[core_begin])) {
      detail::emit(out, text, core_begin, core_begin + 1,
                   TokenKind::kPunctuation);
      ++core_begin;
    }
    std::size_t core_end = chunk_end;
    while (core_end > core_begin && is_punct(text[core_end - 1])) --core_end;
    if (core_begin < core_end) detail::tokenize_core(out, text, core_begin, core_end);
    for (std::size_t p = core_end; p < chunk_end; ++p) {
      detail::emit(out, text, p, p + 1, TokenKind::kPunctuation);
    }
    i = chunk_end;
  }
  return out;
}

inline std::size_t count_words(std::span<const Token> tokens) {
  return static_cast<std::size_t>(
      std::count_if(tokens.begin(), tokens.end(), [](const Token& t) {
        return t.kind != TokenKind::kPunctuation;
      }));
}

struct SentenceSpan {
  std::size_t start = 0;
  std::size_t end = 0;

  bool operator==(const SentenceSpan&) const = default;
};

inline bool is_terminator(char c) {
  return c == '.' || c == '!' || c == '?' || c == ';';
}

namespace detail {

inline bool is_abbreviation(std::string_view word) {
  static const std::array<std::string_view, 5> kAbbreviations = {
      "e.g", "i.e", "approx", "vs", "cf"};
  std::string lower = to_lower(word);
  return std::find(kAbbreviations.begin(), kAbbreviations.end(), lower) !=
         kAbbreviations.end();
}

// Decides whether the '.' at `pos` (already known to be followed by
// whitespace or end of text) ends a sentence.
inline bool period_ends_sentence(std::string_view text, std::size_t pos) {
  std::size_t begin = pos;
  while (begin > 0 && !is_space(text[begin - 1])) --begin;
  while (begin < pos && is_punct(text[begin])) ++begin;
  std::string_view word = text.substr(begin, pos - begin);
  if (is_abbreviation(word)) return false;
  if (word.size() == 1 && is_upper(word[0])) {
    // A lone capital ("C.", "F.") is a unit or initial unless a capitalized
    // word follows.
    std::size_t next = pos + 1;
    while (next < text.size() && is_space(text[next])) ++next;
    return next == text.size() || is_upper(text[next]);
  }
  return true;
}

}  // namespace detail

// Rule-based splitter. A sentence ends at '.', '!', '?' or ';' followed by
// whitespace or end of text, except after e.g./i.e.-style abbreviations and
// lone capital letters not followed by a capitalized word. Spans exclude the
// surrounding whitespace and together cover every non-whitespace byte.
inline std::vector<SentenceSpan> split_sentences(std::string_view text) {
  std::vector<SentenceSpan> spans;
  const std::size_t n = text.size();
  std::size_t start = 0;
  while (start < n && is_space(text[start])) ++start;
  for (std::size_t i = start; i < n; ++i) {
    const char c = text[i];
    if (!is_terminator(c)) continue;
    if (i + 1 < n && !is_space(text[i + 1])) continue;
    if (c == '.' && !detail::period_ends_sentence(text, i)) continue;
    spans.push_back({start, i + 1});
    start = i + 1;
    while (start < n && is_space(text[start])) ++start;
    i = start - 1;
  }
  if (start < n) {
    std::size_t end = n;
    while (end > start && is_space(text[end - 1])) --end;
    spans.push_back({start, end});
  }
  return spans;
}

inline constexpr std::string_view kNumberPlaceholder = "[N]";

// Numbers become "[N]"; everything else is lowercased.
inline std::vector<std::string> normalize_numbers(std::span<const Token> tokens) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const Token& t : tokens) {
    out.push_back(t.kind == TokenKind::kNumber ? std::string(kNumberPlaceholder)
                                               : to_lower(t.text));
  }
  return out;
}

// String form, for re-normalizing already normalized output.
inline std::vector<std::string> normalize_numbers(
    std::span<const std::string> tokens) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const std::string& t : tokens) {
    out.push_back(detail::is_number(t) || t == kNumberPlaceholder
                      ? std::string(kNumberPlaceholder)
                      : to_lower(t));
  }
  return out;
}

// Lowercased, number-normalized words with punctuation dropped.
inline std::vector<std::string> normalized_words(std::string_view text) {
  std::vector<Token> tokens = tokenize(text);
  std::erase_if(tokens, [](const Token& t) {
    return t.kind == TokenKind::kPunctuation;
  });
  return normalize_numbers(std::span<const Token>(tokens));
}

using Ngram = std::vector<std::string>;

inline std::vector<Ngram> ngrams(std::span<const std::string> tokens,
                                 std::size_t n) {
  if (n == 0) throw Error(ErrorKind::kInvalidArgument, "ngrams: n must be >= 1");
  std::vector<Ngram> out;
  if (tokens.size() < n) return out;
  out.reserve(tokens.size() - n + 1);
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    out.emplace_back(tokens.begin() + static_cast<std::ptrdiff_t>(i),
                     tokens.begin() + static_cast<std::ptrdiff_t>(i + n));
  }
  return out;
}

inline std::string join(std::span<const std::string> parts,
                        std::string_view sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

enum class PosTag { kNone, kVerb, kNoun };

class PosLexicon {
 public:
  PosLexicon() = default;

  // Plain text, one entry per line under "#VERBS" / "#NOUNS" headers. Other
  // lines starting with '#' and blank lines are ignored.
  static PosLexicon parse(std::istream& in) {
    PosLexicon lex;
    enum class Section { kNone, kVerbs, kNouns } section = Section::kNone;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      std::string entry = to_lower(trim(line));
      if (entry.empty()) continue;
      if (entry == "#verbs") {
        section = Section::kVerbs;
      } else if (entry == "#nouns") {
        section = Section::kNouns;
      } else if (entry.front() == '#') {
        continue;
      } else if (section == Section::kVerbs) {
        lex.verbs_.insert(entry);
      } else if (section == Section::kNouns) {
        lex.nouns_.insert(entry);
      } else {
        throw ParseError(line_no, "lexicon entry before #VERBS/#NOUNS header");
      }
    }
    for (const std::string& v : lex.verbs_) lex.nouns_.erase(v);
    return lex;
  }

  static PosLexicon parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse(in);
  }

  static PosLexicon load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::kIo, "cannot open lexicon: " + path);
    return parse(in);
  }

  static const PosLexicon& builtin() {
    static const PosLexicon lex = parse(kDefaultLexicon);
    return lex;
  }

  const std::unordered_set<std::string>& verbs() const { return verbs_; }
  const std::unordered_set<std::string>& nouns() const { return nouns_; }

  // Lookup on the lowercase form or a suffix-stripped lemma. Verbs win.
  PosTag tag(std::string_view word) const {
    std::vector<std::string> forms = lemma_candidates(to_lower(word));
    for (const std::string& f : forms) {
      if (verbs_.contains(f)) return PosTag::kVerb;
    }
    for (const std::string& f : forms) {
      if (nouns_.contains(f)) return PosTag::kNoun;
    }
    return PosTag::kNone;
  }

  // The word itself, then -s / -es / -ed / -ing stripped. Stripped stems are
  // also tried with a restored silent 'e' ("baked" -> "bake") and with a
  // doubled final consonant undone ("chopped" -> "chop").
  static std::vector<std::string> lemma_candidates(const std::string& w) {
    std::vector<std::string> out{w};
    auto add_stem = [&](std::string stem) {
      if (stem.size() < 2) return;
      out.push_back(stem);
      out.push_back(stem + "e");
      const std::size_t k = stem.size();
      if (k >= 3 && stem[k - 1] == stem[k - 2]) out.push_back(stem.substr(0, k - 1));
    };
    auto ends_with = [&](std::string_view suffix) {
      return w.size() > suffix.size() && w.ends_with(suffix);
    };
    if (ends_with("ing")) add_stem(w.substr(0, w.size() - 3));
    if (ends_with("ed")) add_stem(w.substr(0, w.size() - 2));
    if (ends_with("es")) out.push_back(w.substr(0, w.size() - 2));
    if (ends_with("s") && !ends_with("ss")) out.push_back(w.substr(0, w.size() - 1));
    return out;
  }

 private:
  std::unordered_set<std::string> verbs_;
  std::unordered_set<std::string> nouns_;
};

struct PosCounts {
  std::size_t verbs = 0;
  std::size_t nouns = 0;

  bool operator==(const PosCounts&) const = default;
};

inline PosCounts pos_counts(std::span<const Token> tokens,
                            const PosLexicon& lexicon) {
  PosCounts counts;
  for (const Token& t : tokens) {
    if (t.kind != TokenKind::kWord) continue;
    switch (lexicon.tag(t.text)) {
      case PosTag::kVerb:
        ++counts.verbs;
        break;
      case PosTag::kNoun:
        ++counts.nouns;
        break;
      case PosTag::kNone:
        break;
    }
  }
  return counts;
}

class Stopwords {
 public:
  explicit Stopwords(std::string_view words = kDefaultStopwords) {
    std::istringstream in{std::string(words)};
    std::string w;
    while (in >> w) words_.insert(to_lower(w));
  }

  bool contains(std::string_view lower_word) const {
    return words_.contains(std::string(lower_word));
  }

 private:
  std::unordered_set<std::string> words_;
};

}  // namespace convseg

#endif  // CONVSEG_TEXTPROC_HPP_
