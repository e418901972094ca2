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

#ifndef CONVSEG_FEATURES_HPP_
#define CONVSEG_FEATURES_HPP_

#include <algorithm>
#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "convseg/corpus.hpp"
#include "convseg/error.hpp"
#include "convseg/textproc.hpp"

namespace convseg {

struct BoundaryFeatures {
  std::size_t sentence_len_tokens = 0;
  std::size_t tokens_since_last_break = 0;
  double relative_position = 0.0;
  std::size_t verb_count = 0;
  std::size_t noun_count = 0;
  bool has_temperature_cue = false;
  bool has_time_cue = false;
  // One-hot over '.', ';', '!', '?'.
  std::array<bool, 4> terminator{};

  static constexpr std::size_t kDimension = 11;

  static const std::vector<std::string>& names() {
    static const std::vector<std::string> kNames = {
        "sentence_len_tokens", "tokens_since_last_break", "relative_position",
        "verb_count",          "noun_count",              "has_temperature_cue",
        "has_time_cue",        "terminator_period",       "terminator_semicolon",
        "terminator_exclamation", "terminator_question"};
    return kNames;
  }

  std::vector<double> to_vector() const {
    std::vector<double> v;
    v.reserve(kDimension);
    v.push_back(static_cast<double>(sentence_len_tokens));
    v.push_back(static_cast<double>(tokens_since_last_break));
    v.push_back(relative_position);
    v.push_back(static_cast<double>(verb_count));
    v.push_back(static_cast<double>(noun_count));
    v.push_back(has_temperature_cue ? 1.0 : 0.0);
    v.push_back(has_time_cue ? 1.0 : 0.0);
    for (bool t : terminator) v.push_back(t ? 1.0 : 0.0);
    return v;
  }
};

namespace detail {

inline bool is_time_unit(std::string_view w) {
  static const std::array<std::string_view, 12> kUnits = {
      "minute", "minutes", "min", "mins", "hour",   "hours",
      "hr",     "hrs",     "second", "seconds", "sec", "secs"};
  return std::find(kUnits.begin(), kUnits.end(), w) != kUnits.end();
}

}  // namespace detail

// "[N] minutes"-style mentions.
inline bool has_time_cue(std::span<const std::string> normalized) {
  for (std::size_t i = 0; i + 1 < normalized.size(); ++i) {
    if (normalized[i] == kNumberPlaceholder && detail::is_time_unit(normalized[i + 1])) {
      return true;
    }
  }
  return false;
}

// "preheat", "degrees", a degree sign, or "[N] F" / "[N] C".
inline bool has_temperature_cue(std::span<const std::string> normalized) {
  for (std::size_t i = 0; i < normalized.size(); ++i) {
    const std::string& w = normalized[i];
    if (w == "preheat" || w == "degrees" || w == "degree" ||
        w.find("\xC2\xB0") != std::string::npos) {
      return true;
    }
    if (w == kNumberPlaceholder && i + 1 < normalized.size() &&
        (normalized[i + 1] == "f" || normalized[i + 1] == "c")) {
      return true;
    }
  }
  return false;
}

// Features of the sentence that ends at doc.candidates[index], i.e. the text
// between the previous candidate (or the start) and this one. They depend on
// the text alone, never on predicted or gold breaks, so the "since last break"
// count runs from the previous candidate.
inline BoundaryFeatures extract_features(const Document& doc, std::size_t index,
                                         const PosLexicon& lexicon) {
  if (index >= doc.candidates.size()) {
    throw Error(ErrorKind::kInvalidArgument, "candidate index out of range");
  }
  const std::size_t end = doc.candidates[index];
  const std::size_t begin = index == 0 ? 0 : doc.candidates[index - 1];
  const std::string_view sentence = std::string_view(doc.text).substr(begin, end - begin);

  const std::vector<Token> tokens = tokenize(sentence);
  const std::vector<std::string> words = normalized_words(sentence);
  const PosCounts pos = pos_counts(tokens, lexicon);

  BoundaryFeatures f;
  f.sentence_len_tokens = count_words(tokens);
  f.tokens_since_last_break = f.sentence_len_tokens;
  f.relative_position = doc.text.empty()
                            ? 0.0
                            : static_cast<double>(end) / static_cast<double>(doc.text.size());
  f.verb_count = pos.verbs;
  f.noun_count = pos.nouns;
  f.has_temperature_cue = has_temperature_cue(words);
  f.has_time_cue = has_time_cue(words);
  switch (doc.text[end - 1]) {
    case '.': f.terminator[0] = true; break;
    case ';': f.terminator[1] = true; break;
    case '!': f.terminator[2] = true; break;
    case '?': f.terminator[3] = true; break;
    default: break;
  }
  return f;
}

inline std::vector<BoundaryFeatures> extract_all_features(const Document& doc,
                                                          const PosLexicon& lexicon) {
  std::vector<BoundaryFeatures> out;
  out.reserve(doc.candidates.size());
  for (std::size_t i = 0; i < doc.candidates.size(); ++i) {
    out.push_back(extract_features(doc, i, lexicon));
  }
  return out;
}

}  // namespace convseg

#endif  // CONVSEG_FEATURES_HPP_
