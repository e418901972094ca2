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

// Segments the sample recipes with the baseline methods and prints P_k and
// boundary F1 for each.
//
//   segment_demo [recipes.jsonl]

#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include "convseg/convseg.hpp"

int main(int argc, char** argv) {
  const std::string path = argc > 1 ? argv[1] : "samples/recipes.jsonl";
  std::vector<convseg::Document> docs;
  try {
    for (const convseg::RawRecipe& r :
         convseg::dedup(convseg::filter_min_steps(convseg::ingest_file(path)))) {
      docs.push_back(convseg::build_document(r));
    }
  } catch (const convseg::Error& e) {
    std::fprintf(stderr, "segment_demo: %s\n", e.what());
    return convseg::exit_code_for(e.kind());
  }

  std::vector<std::unique_ptr<convseg::Segmenter>> methods;
  methods.push_back(std::make_unique<convseg::RandSegmenter>(0.5));
  methods.push_back(std::make_unique<convseg::RandSegmenter>(0.75));
  methods.push_back(std::make_unique<convseg::EveryNSegmenter>(1));
  methods.push_back(std::make_unique<convseg::EveryNSegmenter>(2));
  methods.push_back(std::make_unique<convseg::TextTilingSegmenter>());

  std::printf("%zu documents\n%-12s %8s %8s %8s %8s\n", docs.size(), "method", "Pk",
              "P", "R", "F1");
  for (const auto& m : methods) {
    std::vector<convseg::DocRecord> records;
    for (const convseg::Document& d : docs) {
      records.push_back(convseg::evaluate_document(d, m->segment(d, 1)));
    }
    const convseg::Aggregate a = convseg::aggregate(records);
    std::printf("%-12s %8.3f %8.3f %8.3f %8.3f\n", m->name().c_str(), a.pk, a.precision,
                a.recall, a.f1);
  }
  return 0;
}
