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

#ifndef CONVSEG_TESTS_SUPPORT_SYNTHETIC_HPP_
#define CONVSEG_TESTS_SUPPORT_SYNTHETIC_HPP_

// Generators for synthetic corpora used across the unit and acceptance
// suites. Everything is driven by an explicit Rng so suites are reproducible.

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "convseg/corpus.hpp"
#include "convseg/random.hpp"

namespace convseg::testing {

template <typename T, std::size_t N>
const T& pick(Rng& rng, const std::array<T, N>& items) {
  return items[uniform_index(rng, N)];
}

inline int uniform_int(Rng& rng, int lo, int hi) {
  return lo + static_cast<int>(uniform_index(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

inline bool coin(Rng& rng, double p) { return uniform01(rng) < p; }

inline constexpr std::array<std::string_view, 24> kVerbs = {
    "Stir",  "Whisk", "Combine", "Fold",  "Mix",     "Toss",  "Chop",   "Slice",
    "Dice",  "Mince", "Pour",    "Spread", "Sprinkle", "Drizzle", "Layer", "Arrange",
    "Season", "Brush", "Coat",   "Transfer", "Place", "Set",   "Cover",  "Drain"};

inline constexpr std::array<std::string_view, 48> kIngredients = {
    "flour",   "sugar",    "butter",  "eggs",     "milk",     "onion",   "garlic",
    "carrots", "celery",   "chicken", "beef",     "pork",     "rice",    "pasta",
    "tomatoes", "spinach", "cheese",  "cream",    "honey",    "vanilla", "cinnamon",
    "nutmeg",  "lemon",    "lime",    "basil",    "parsley",  "oregano", "paprika",
    "potatoes", "mushrooms", "peppers", "zucchini", "beans",  "corn",    "oats",
    "walnuts", "pecans",   "raisins", "bananas",  "apples",   "peaches", "yogurt",
    "broth",   "vinegar",  "mustard", "ginger",   "shrimp",   "salmon"};

inline constexpr std::array<std::string_view, 12> kTools = {
    "bowl", "skillet", "saucepan", "baking dish", "pan",   "pot",
    "tray", "plate",   "jar",      "mixer",       "wok",   "colander"};

inline constexpr std::array<std::string_view, 16> kAdjectives = {
    "large", "small",   "warm",   "fresh",  "chopped", "melted", "soft",    "golden",
    "crisp", "tender",  "smooth", "thick",  "light",   "cold",   "toasted", "creamy"};

inline std::string capitalize(std::string_view s) {
  std::string out(s);
  if (!out.empty() && out[0] >= 'a' && out[0] <= 'z') out[0] = static_cast<char>(out[0] - 32);
  return out;
}

// One sentence without a time or temperature cue.
inline std::string plain_sentence(Rng& rng) {
  const std::string v(pick(rng, kVerbs));
  const std::string a(pick(rng, kIngredients)), b(pick(rng, kIngredients)),
      c(pick(rng, kIngredients));
  const std::string tool(pick(rng, kTools)), adj(pick(rng, kAdjectives));
  switch (uniform_index(rng, 6)) {
    case 0: return v + " the " + adj + " " + a + " in a " + tool + ".";
    case 1: return v + " the " + a + " and " + b + " together.";
    case 2: return "Add the " + a + ", " + b + " and " + c + " to the " + tool + ".";
    case 3: return v + " in the " + a + " until " + adj + ".";
    case 4: return v + " the " + a + " with the " + b + " and set aside.";
    default: return "Gently " + to_lower(v) + " the " + a + " over the " + b + ".";
  }
}

inline std::string time_sentence(Rng& rng) {
  const std::string n = std::to_string(uniform_int(rng, 2, 60));
  const std::string a(pick(rng, kIngredients));
  switch (uniform_index(rng, 3)) {
    case 0: return "Bake for " + n + " minutes.";
    case 1: return "Simmer the " + a + " for " + n + " minutes.";
    default: return "Let the " + a + " rest for " + n + " minutes.";
  }
}

inline std::string temperature_sentence(Rng& rng) {
  const std::string n = std::to_string(uniform_int(rng, 30, 45) * 10);
  switch (uniform_index(rng, 2)) {
    case 0: return "Preheat oven to " + n + " degrees F.";
    default: return "Heat the " + std::string(pick(rng, kTools)) + " to " + n + " degrees.";
  }
}

inline RawRecipe random_recipe(Rng& rng, const std::string& id, int min_steps = 3,
                               int max_steps = 9) {
  RawRecipe r;
  r.id = id;
  r.title = capitalize(pick(rng, kIngredients)) + " " + std::string(pick(rng, kTools));
  const int steps = uniform_int(rng, min_steps, max_steps);
  for (int s = 0; s < steps; ++s) {
    std::string step;
    const int sentences = uniform_int(rng, 1, 3);
    for (int k = 0; k < sentences; ++k) {
      if (k) step += ' ';
      const double u = uniform01(rng);
      step += u < 0.15 ? time_sentence(rng) : u < 0.22 ? temperature_sentence(rng) : plain_sentence(rng);
    }
    r.steps.push_back(step);
  }
  return r;
}

inline const std::vector<std::string>& sorted_entries(bool verbs) {
  static const auto make = [](const std::unordered_set<std::string>& set) {
    std::vector<std::string> v(set.begin(), set.end());
    std::sort(v.begin(), v.end());
    return v;
  };
  static const std::vector<std::string> kLexVerbs = make(PosLexicon::builtin().verbs());
  static const std::vector<std::string> kLexNouns = make(PosLexicon::builtin().nouns());
  return verbs ? kLexVerbs : kLexNouns;
}

inline const std::string& pick(Rng& rng, const std::vector<std::string>& items) {
  return items[uniform_index(rng, items.size())];
}

// Recipe-like sentence over the whole built-in lexicon, for corpora where
// distinct documents must stay lexically distinct.
inline std::string lexicon_sentence(Rng& rng) {
  const auto& verbs = sorted_entries(true);
  const auto& nouns = sorted_entries(false);
  const std::string v = capitalize(pick(rng, verbs));
  const std::string a = pick(rng, nouns), b = pick(rng, nouns), c = pick(rng, nouns);
  const std::string adj(pick(rng, kAdjectives));
  const std::string n = std::to_string(uniform_int(rng, 1, 12));
  switch (uniform_index(rng, 8)) {
    case 0: return v + " the " + adj + " " + a + " with " + b + ".";
    case 1: return v + " " + n + " cups of " + a + " into the " + b + ".";
    case 2: return v + " the " + a + ", " + b + " and " + c + " until " + adj + ".";
    case 3: return v + " " + a + " over the " + b + " and " + pick(rng, verbs) + " well.";
    case 4: return "Using a " + a + ", " + pick(rng, verbs) + " the " + b + " gently.";
    case 5: return v + " the " + a + " for " + n + " minutes.";
    case 6: return v + " each " + a + " on the " + adj + " " + b + ".";
    default: return v + " the " + a + " and " + c + " in a " + b + ".";
  }
}

// About 200 tokens on average.
inline RawRecipe lexicon_recipe(Rng& rng, const std::string& id) {
  RawRecipe r;
  r.id = id;
  r.title = capitalize(pick(rng, sorted_entries(false)));
  const int steps = uniform_int(rng, 8, 20);
  for (int s = 0; s < steps; ++s) {
    std::string step;
    const int sentences = uniform_int(rng, 1, 3);
    for (int k = 0; k < sentences; ++k) {
      if (k) step += ' ';
      step += lexicon_sentence(rng);
    }
    r.steps.push_back(step);
  }
  return r;
}

// Replaces one word of one step with a different vocabulary word.
inline RawRecipe single_token_edit(const RawRecipe& original, Rng& rng, const std::string& id) {
  RawRecipe r = original;
  r.id = id;
  std::string& step = r.steps[uniform_index(rng, r.steps.size())];
  std::vector<Token> words;
  for (const Token& t : tokenize(step)) {
    if (t.kind == TokenKind::kWord) words.push_back(t);
  }
  const Token& target = words[uniform_index(rng, words.size())];
  std::string replacement;
  do {
    replacement = std::string(pick(rng, kIngredients));
  } while (replacement == to_lower(target.text));
  step.replace(target.start, target.end - target.start, replacement);
  return r;
}


// A document whose gold breaks follow time/temperature cues: every sentence
// with a cue ends a step, every other sentence does not, and each of those
// decisions is flipped with probability `noise`.
inline Document cue_document(Rng& rng, const std::string& id, double noise,
                             double cue_rate = 0.4) {
  const int n_sentences = uniform_int(rng, 6, 14);
  std::vector<std::string> sentences;
  std::vector<bool> ends_step;
  for (int i = 0; i < n_sentences; ++i) {
    const bool cue = coin(rng, cue_rate);
    sentences.push_back(cue ? (coin(rng, 0.5) ? time_sentence(rng) : temperature_sentence(rng))
                            : plain_sentence(rng));
    ends_step.push_back(cue != coin(rng, noise));
  }
  RawRecipe r;
  r.id = id;
  r.title = "cue";
  std::string step;
  for (int i = 0; i < n_sentences; ++i) {
    if (!step.empty()) step += ' ';
    step += sentences[i];
    if (ends_step[i] || i + 1 == n_sentences) {
      r.steps.push_back(step);
      step.clear();
    }
  }
  return build_document(r);
}

inline std::vector<Document> cue_corpus(Rng& rng, const std::string& prefix, int n_docs,
                                        double noise) {
  std::vector<Document> docs;
  for (int i = 0; i < n_docs; ++i) docs.push_back(cue_document(rng, prefix + std::to_string(i), noise));
  return docs;
}

inline constexpr std::array<std::string_view, 12> kFillers = {
    "the", "and", "then", "with", "of", "a", "into", "over", "it", "so", "is", "for"};

// Two disjoint five-word vocabularies; every sentence uses each word of its
// topic exactly once, in random order, padded with stopwords. The gold break
// sits at the topic switch.
struct TwoTopicDocument {
  Document doc;
  std::size_t switch_offset = 0;
};

inline TwoTopicDocument two_topic_document(Rng& rng, const std::string& id) {
  std::vector<std::string> pool = sorted_entries(false);
  shuffle(std::span<std::string>(pool), rng);
  const std::vector<std::string> topic_a(pool.begin(), pool.begin() + 5);
  const std::vector<std::string> topic_b(pool.begin() + 5, pool.begin() + 10);
  auto sentence = [&](const std::vector<std::string>& topic) {
    std::vector<std::string> words = topic;
    shuffle(std::span<std::string>(words), rng);
    std::string out;
    for (std::size_t i = 0; i < words.size(); ++i) {
      if (i) out += ' ';
      if (coin(rng, 0.5)) out += std::string(pick(rng, kFillers)) + ' ';
      out += words[i];
    }
    out[0] = static_cast<char>(out[0] >= 'a' && out[0] <= 'z' ? out[0] - 32 : out[0]);
    return out + '.';
  };
  RawRecipe r;
  r.id = id;
  r.title = "two topics";
  for (const auto* topic : {&topic_a, &topic_b}) {
    std::string step;
    const int n = uniform_int(rng, 19, 21);
    for (int i = 0; i < n; ++i) {
      if (i) step += ' ';
      step += sentence(*topic);
    }
    r.steps.push_back(step);
  }
  TwoTopicDocument out;
  out.doc = build_document(r);
  out.switch_offset = out.doc.step_offsets.front();
  return out;
}

}  // namespace convseg::testing

#endif  // CONVSEG_TESTS_SUPPORT_SYNTHETIC_HPP_
