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

#ifndef CONVSEG_CLASSIFIER_HPP_
#define CONVSEG_CLASSIFIER_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "convseg/corpus.hpp"
#include "convseg/error.hpp"
#include "convseg/features.hpp"
#include "convseg/segmenters.hpp"

namespace convseg {

// Logistic boundary classifier: P(break) = logistic(w . x + b).
struct ClassifierModel {
  std::vector<std::string> feature_names = BoundaryFeatures::names();
  std::vector<double> weights = std::vector<double>(BoundaryFeatures::kDimension, 0.0);
  double bias = 0.0;
  double decision_threshold = 0.5;
  std::uint64_t seed = 0;
  std::string trained_on;

  std::size_t dimension() const { return weights.size(); }

  // Weights followed by the bias.
  std::vector<double> parameters() const {
    std::vector<double> p = weights;
    p.push_back(bias);
    return p;
  }

  void set_parameters(std::span<const double> p) {
    if (p.size() != weights.size() + 1) {
      throw Error(ErrorKind::kInvalidArgument, "parameter vector has wrong length");
    }
    std::copy(p.begin(), p.end() - 1, weights.begin());
    bias = p.back();
  }

  bool operator==(const ClassifierModel&) const = default;
};

inline double logistic(double z) {
  if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

inline double predict_probability(const ClassifierModel& model,
                                  std::span<const double> x) {
  if (x.size() != model.weights.size()) {
    throw Error(ErrorKind::kInvalidArgument,
                "feature dimension " + std::to_string(x.size()) +
                    " does not match model dimension " +
                    std::to_string(model.weights.size()));
  }
  double z = model.bias;
  for (std::size_t i = 0; i < x.size(); ++i) z += model.weights[i] * x[i];
  return logistic(z);
}

inline double classifier_predict(const ClassifierModel& model,
                                 const BoundaryFeatures& features) {
  const std::vector<double> x = features.to_vector();
  return predict_probability(model, x);
}

inline nlohmann::json model_to_json(const ClassifierModel& m) {
  return nlohmann::json{{"feature_names", m.feature_names},
                        {"weights", m.weights},
                        {"bias", m.bias},
                        {"threshold", m.decision_threshold},
                        {"seed", m.seed},
                        {"trained_on", m.trained_on}};
}

inline ClassifierModel model_from_json(const nlohmann::json& j) {
  ClassifierModel m;
  try {
    m.feature_names = j.at("feature_names").get<std::vector<std::string>>();
    m.weights = j.at("weights").get<std::vector<double>>();
    m.bias = j.at("bias").get<double>();
    m.decision_threshold = j.value("threshold", 0.5);
    m.seed = j.value("seed", std::uint64_t{0});
    m.trained_on = j.value("trained_on", std::string());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kFormat, std::string("model file: ") + e.what());
  }
  if (m.feature_names.size() != m.weights.size()) {
    throw Error(ErrorKind::kFormat, "model file: feature_names and weights differ in length");
  }
  if (!(m.decision_threshold > 0.0 && m.decision_threshold < 1.0)) {
    throw Error(ErrorKind::kFormat, "model file: threshold must be in (0, 1)");
  }
  return m;
}

inline ClassifierModel load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIo, "cannot open " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::kFormat, std::string("model file: ") + e.what());
  }
  return model_from_json(j);
}

struct LabeledExample {
  std::vector<double> x;
  int label = 0;
};

// One example per candidate; positive when the candidate is a gold break.
inline std::vector<LabeledExample> labeled_examples(std::span<const Document> docs,
                                                    const PosLexicon& lexicon) {
  std::vector<LabeledExample> out;
  for (const Document& d : docs) {
    for (std::size_t i = 0; i < d.candidates.size(); ++i) {
      const bool gold = std::binary_search(d.step_offsets.begin(), d.step_offsets.end(),
                                           d.candidates[i]);
      out.push_back({extract_features(d, i, lexicon).to_vector(), gold ? 1 : 0});
    }
  }
  return out;
}

class ClassifierSegmenter final : public Segmenter {
 public:
  ClassifierSegmenter(ClassifierModel model,
                      PosLexicon lexicon = PosLexicon::builtin())
      : model_(std::move(model)), lexicon_(std::move(lexicon)) {
    if (model_.weights.size() != BoundaryFeatures::kDimension) {
      throw Error(ErrorKind::kInvalidArgument, "classifier: model dimension mismatch");
    }
  }

  std::string name() const override { return "Classifier"; }

  const ClassifierModel& model() const { return model_; }

 protected:
  std::vector<std::size_t> choose_breaks(const Document& doc,
                                         std::uint64_t) const override {
    std::vector<std::size_t> breaks;
    for (std::size_t i = 0; i < doc.candidates.size(); ++i) {
      if (classifier_predict(model_, extract_features(doc, i, lexicon_)) >
          model_.decision_threshold) {
        breaks.push_back(doc.candidates[i]);
      }
    }
    return breaks;
  }

 private:
  ClassifierModel model_;
  PosLexicon lexicon_;
};

}  // namespace convseg

#endif  // CONVSEG_CLASSIFIER_HPP_
