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

#ifndef CONVSEG_FACTORY_HPP_
#define CONVSEG_FACTORY_HPP_

#include <memory>
#include <optional>
#include <string>

#include "convseg/classifier.hpp"
#include "convseg/error.hpp"
#include "convseg/scorer.hpp"
#include "convseg/segmenters.hpp"

namespace convseg {

struct SegmenterSpec {
  std::string method;  // rand | every | texttiling | classifier | external
  double p = 0.5;
  std::size_t n = 1;
  TextTilingParams texttiling;
  std::optional<ClassifierModel> model;
  PosLexicon lexicon = PosLexicon::builtin();
  std::string endpoint;
  double threshold = 0.5;
};

inline std::unique_ptr<Segmenter> make_segmenter(const SegmenterSpec& spec) {
  if (spec.method == "rand") return std::make_unique<RandSegmenter>(spec.p);
  if (spec.method == "every") return std::make_unique<EveryNSegmenter>(spec.n);
  if (spec.method == "texttiling") return std::make_unique<TextTilingSegmenter>(spec.texttiling);
  if (spec.method == "classifier") {
    if (!spec.model) throw Error(ErrorKind::kInvalidArgument, "classifier: no model given");
    return std::make_unique<ClassifierSegmenter>(*spec.model, spec.lexicon);
  }
  if (spec.method == "external") {
    return std::make_unique<ExternalSegmenter>(
        std::shared_ptr<ScorerTransport>(make_transport(spec.endpoint)), spec.threshold);
  }
  throw Error(ErrorKind::kFormat, "unknown segmentation method \"" + spec.method + "\"");
}

}  // namespace convseg

#endif  // CONVSEG_FACTORY_HPP_
