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

#ifndef CONVSEG_SEGMENTATION_HPP_
#define CONVSEG_SEGMENTATION_HPP_

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "convseg/corpus.hpp"
#include "convseg/error.hpp"

namespace convseg {

struct Segmentation {
  std::string doc_id;
  std::vector<std::size_t> breaks;
  std::vector<std::string> steps;

  std::size_t n_steps() const { return breaks.size() + 1; }

  bool operator==(const Segmentation&) const = default;
};

// Validates that breaks are strictly increasing members of doc.candidates.
inline Segmentation make_segmentation(const Document& doc,
                                      std::vector<std::size_t> breaks) {
  std::size_t prev = 0;
  for (std::size_t b : breaks) {
    if (b <= prev) {
      throw Error(ErrorKind::kInvalidArgument,
                  "breaks for " + doc.id + " are not strictly increasing");
    }
    if (!std::binary_search(doc.candidates.begin(), doc.candidates.end(), b)) {
      throw Error(ErrorKind::kInvalidArgument,
                  "break " + std::to_string(b) + " of " + doc.id + " is not a candidate");
    }
    prev = b;
  }
  Segmentation seg;
  seg.doc_id = doc.id;
  seg.steps = cut_at(doc.text, breaks);
  seg.breaks = std::move(breaks);
  return seg;
}

// The reference segmentation. Gold breaks need not be candidates.
inline Segmentation gold_segmentation(const Document& doc) {
  return Segmentation{doc.id, doc.step_offsets, gold_steps(doc)};
}

// One line of a segmentation JSONL file.
struct SegmentationRecord {
  Segmentation segmentation;
  std::string method;
  std::optional<std::uint64_t> seed;
};

inline nlohmann::json segmentation_to_json(const Segmentation& s,
                                           const std::string& method,
                                           std::optional<std::uint64_t> seed = {}) {
  nlohmann::json j{{"id", s.doc_id},
                   {"method", method},
                   {"breaks", s.breaks},
                   {"steps", s.steps}};
  if (seed) j["seed"] = *seed;
  return j;
}

inline std::vector<SegmentationRecord> read_segmentations(std::istream& in) {
  std::vector<SegmentationRecord> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    try {
      nlohmann::json j = nlohmann::json::parse(line);
      SegmentationRecord r;
      r.segmentation.doc_id = j.at("id").get<std::string>();
      r.segmentation.breaks = j.at("breaks").get<std::vector<std::size_t>>();
      r.segmentation.steps = j.value("steps", std::vector<std::string>{});
      r.method = j.value("method", std::string());
      if (j.contains("seed")) r.seed = j.at("seed").get<std::uint64_t>();
      out.push_back(std::move(r));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(line_no, e.what());
    }
  }
  return out;
}

inline std::vector<SegmentationRecord> read_segmentations_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIo, "cannot open " + path);
  return read_segmentations(in);
}

}  // namespace convseg

#endif  // CONVSEG_SEGMENTATION_HPP_
