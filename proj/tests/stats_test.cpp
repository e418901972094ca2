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

#include "convseg/stats.hpp"

#include <gtest/gtest.h>

#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "convseg/random.hpp"
#include "synthetic.hpp"

namespace convseg {
namespace {

RawRecipe recipe(const std::string& id, std::vector<std::string> steps) {
  return RawRecipe{id, "t", std::move(steps), false};
}

// 14 steps of six words: the first and last three words of each step are its
// boundary tri-grams. g1..g6 occur twice, g7 three times, u1..u13 once: 20
// distinct tri-grams, 13 of them singletons.
StepLists uniqueness_corpus() {
  std::vector<std::string> grams;
  for (int i = 1; i <= 6; ++i) {
    const std::string g = "g" + std::to_string(i);
    grams.insert(grams.end(), 2, g + "a " + g + "b " + g + "c");
  }
  grams.insert(grams.end(), 3, "g7a g7b g7c");
  for (int i = 1; i <= 13; ++i) {
    const std::string u = "u" + std::to_string(i);
    grams.push_back(u + "a " + u + "b " + u + "c");
  }
  StepLists corpus(2);
  for (std::size_t i = 0; i < grams.size(); i += 2) {
    corpus[i % 4 == 0 ? 0 : 1].push_back(grams[i] + " " + grams[i + 1] + ".");
  }
  return corpus;
}

TEST(CorpusStatsTest, Arithmetic) {
  const CorpusStats s = corpus_stats(StepLists{{"a b", "c d e"}});
  EXPECT_DOUBLE_EQ(s.step_tokens.mean(), 2.5);
  EXPECT_DOUBLE_EQ(s.doc_steps.mean(), 2.0);
  EXPECT_DOUBLE_EQ(s.doc_tokens.mean(), 5.0);
  EXPECT_DOUBLE_EQ(s.step_tokens.variance(), 0.25);
}

TEST(CorpusStatsTest, IdenticalStepsHaveZeroVariance) {
  const CorpusStats s = corpus_stats(StepLists{{"Stir the soup.", "Stir the soup."},
                                               {"Stir the soup."}});
  for (const auto& [name, dist] : s.named()) {
    if (name.rfind("step_", 0) == 0) {
      EXPECT_EQ(dist->variance(), 0.0) << name;
    }
  }
}

TEST(CorpusStatsTest, TwoSegmentationsOfOneCorpus) {
  const Document d = build_document(
      recipe("d", {"Preheat the oven. Grease a pan.", "Mix flour and sugar.", "Bake it."}));
  const std::vector<Document> docs{d};
  const CorpusStats reading = corpus_stats(docs);
  const Segmentation fine = make_segmentation(d, d.candidates);
  const CorpusStats dialog =
      corpus_stats(predicted_step_lists(docs, std::vector<Segmentation>{fine}));
  EXPECT_DOUBLE_EQ(reading.doc_steps.mean(), 3.0);
  EXPECT_DOUBLE_EQ(dialog.doc_steps.mean(), 4.0);
  EXPECT_EQ(reading.doc_tokens.values, dialog.doc_tokens.values);
  EXPECT_EQ(reading.doc_sentences.values, dialog.doc_sentences.values);
  EXPECT_THROW(predicted_step_lists(docs, std::vector<Segmentation>{}), Error);
}

TEST(CorpusStatsTest, EmptyCorpus) {
  try {
    corpus_stats(StepLists{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kEmpty);
  }
}

TEST(CorpusStatsTest, MeanIsSumOverCountAndHistogramMassProperty) {
  Rng rng(3);
  std::vector<Document> docs;
  for (int i = 0; i < 40; ++i) {
    docs.push_back(build_document(testing::random_recipe(rng, "s" + std::to_string(i))));
  }
  const CorpusStats s = corpus_stats(docs);
  for (const auto& [name, dist] : s.named()) {
    double sum = 0;
    for (std::size_t v : dist->values) sum += static_cast<double>(v);
    EXPECT_DOUBLE_EQ(dist->mean(), sum / static_cast<double>(dist->values.size())) << name;
    std::size_t mass = 0;
    for (const auto& [bin, count] : dist->histogram()) mass += count;
    EXPECT_EQ(mass, dist->values.size()) << name;
  }
}

TEST(BoundaryNgramsTest, StartingTrigram) {
  const StepLists corpus{{"Preheat oven to 350 degrees.", "Mix the batter well."},
                         {"Preheat oven to 200 C.", "Preheat oven to broil."}};
  const NgramTable t = boundary_ngrams(corpus, NgramPosition::kStarting, 3, 1);
  ASSERT_EQ(t.entries.size(), 1u);
  EXPECT_EQ(t.entries[0].first, (Ngram{"preheat", "oven", "to"}));
  EXPECT_EQ(t.entries[0].second, 3u);
}

TEST(BoundaryNgramsTest, EndingTrigramWithNumberPlaceholder) {
  const StepLists corpus{{"Bake for 10 minutes.", "Simmer gently for 25 minutes."}};
  const NgramTable t = boundary_ngrams(corpus, NgramPosition::kEnding, 3, 5);
  ASSERT_EQ(t.entries.size(), 1u);
  EXPECT_EQ(t.entries[0].first, (Ngram{"for", "[N]", "minutes"}));
  EXPECT_EQ(t.entries[0].second, 2u);
}

TEST(BoundaryNgramsTest, ShortStepsContributeNothing) {
  const StepLists corpus{{"Stir.", "Serve hot."}};
  EXPECT_TRUE(boundary_ngrams(corpus, NgramPosition::kStarting, 3, 5).entries.empty());
  EXPECT_EQ(boundary_ngrams(corpus, NgramPosition::kStarting, 1, 5).entries.size(), 2u);
  EXPECT_THROW(boundary_ngrams(corpus, NgramPosition::kStarting, 0, 5), Error);
  EXPECT_THROW(boundary_ngrams(corpus, NgramPosition::kStarting, 1, 0), Error);
}

TEST(BoundaryNgramsTest, TiesAreLexicographic) {
  const StepLists corpus{{"pour b", "add c", "pour b", "add c", "zest a"}};
  const NgramTable t = boundary_ngrams(corpus, NgramPosition::kStarting, 1, 10);
  ASSERT_EQ(t.entries.size(), 3u);
  EXPECT_EQ(t.entries[0].first, Ngram{"add"});
  EXPECT_EQ(t.entries[1].first, Ngram{"pour"});
  EXPECT_EQ(t.entries[2].first, Ngram{"zest"});
}

TEST(BoundaryNgramsTest, FrequenciesSumToEligibleStepsProperty) {
  Rng rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    StepLists corpus;
    for (int i = 0; i < 20; ++i) corpus.push_back(testing::random_recipe(rng, "x").steps);
    for (std::size_t n : {1, 2, 3, 6}) {
      std::size_t eligible = 0;
      for (const auto& steps : corpus) {
        for (const std::string& s : steps) eligible += step_words(s).size() >= n;
      }
      for (auto pos : {NgramPosition::kStarting, NgramPosition::kEnding}) {
        std::size_t sum = 0;
        for (const auto& [g, c] : boundary_ngrams(corpus, pos, n, 1000000).entries) {
          ASSERT_GE(c, 1u);
          sum += c;
        }
        ASSERT_EQ(sum, eligible);
      }
    }
  }
}

TEST(BoundaryNgramsTest, InvariantToDocumentOrderProperty) {
  Rng rng(5);
  StepLists corpus;
  for (int i = 0; i < 50; ++i) corpus.push_back(testing::random_recipe(rng, "x").steps);
  const auto reference = ngram_table_to_json(boundary_ngrams(corpus, NgramPosition::kEnding, 2, 20));
  const auto stats = stats_to_json(corpus_stats(corpus)).dump();
  const double unique = uniqueness_fraction(corpus, 2);
  for (int trial = 0; trial < 10; ++trial) {
    shuffle(std::span<std::vector<std::string>>(corpus), rng);
    EXPECT_EQ(ngram_table_to_json(boundary_ngrams(corpus, NgramPosition::kEnding, 2, 20)),
              reference);
    EXPECT_EQ(stats_to_json(corpus_stats(corpus)).dump(), stats);
    EXPECT_EQ(uniqueness_fraction(corpus, 2), unique);
  }
}

TEST(UniquenessTest, SharedTrigramOnly) {
  const StepLists corpus{{"Preheat oven to.", "preheat oven to"}, {"Preheat oven to!"}};
  EXPECT_EQ(uniqueness_fraction(corpus, 3), 0.0);
}

TEST(UniquenessTest, AllDistinct) {
  const StepLists corpus{{"a b c d e f", "g h i j k l"}};
  EXPECT_EQ(uniqueness_fraction(corpus, 3), 1.0);
}

TEST(UniquenessTest, ConstructedCorpus) {
  const StepLists corpus = uniqueness_corpus();
  std::map<std::string, int> oracle;
  for (const auto& steps : corpus) {
    for (const std::string& s : steps) {
      std::istringstream words(s.substr(0, s.size() - 1));
      std::vector<std::string> w{std::istream_iterator<std::string>(words), {}};
      ++oracle[w[0] + " " + w[1] + " " + w[2]];
      ++oracle[w[3] + " " + w[4] + " " + w[5]];
    }
  }
  int singletons = 0;
  for (const auto& [g, c] : oracle) singletons += c == 1;
  ASSERT_EQ(oracle.size(), 20u);
  ASSERT_EQ(singletons, 13);
  EXPECT_EQ(uniqueness_fraction(corpus, 3), 0.65);
}

TEST(UniquenessTest, NoNgramsIsAnError) {
  EXPECT_THROW(uniqueness_fraction(StepLists{{"Stir."}}, 3), Error);
}

TEST(StatsExportTest, CsvShapes) {
  const CorpusStats s = corpus_stats(StepLists{{"a b", "c d e"}});
  std::ostringstream hist, table, ngrams;
  write_histogram_csv(hist, s.step_tokens);
  EXPECT_EQ(hist.str(), "bin,count\n2,1\n3,1\n");
  write_stats_csv(table, s);
  EXPECT_NE(table.str().find("step_tokens,2,2.5,0.25\n"), std::string::npos);
  write_ngram_csv(ngrams, boundary_ngrams(StepLists{{"say \"hi\" now"}},
                                          NgramPosition::kStarting, 1, 1));
  EXPECT_EQ(ngrams.str(), "ngram,frequency\n\"say\",1\n");
}

}  // namespace
}  // namespace convseg
