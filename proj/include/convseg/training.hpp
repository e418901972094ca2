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

#ifndef CONVSEG_TRAINING_HPP_
#define CONVSEG_TRAINING_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "convseg/classifier.hpp"
#include "convseg/error.hpp"
#include "convseg/metrics.hpp"
#include "convseg/random.hpp"

namespace convseg {

inline constexpr double kProbabilityEpsilon = 1e-12;

inline double clamp_probability(double p) {
  return std::clamp(p, kProbabilityEpsilon, 1.0 - kProbabilityEpsilon);
}

// -[y log p + (1 - y) log(1 - p)], p clamped to [eps, 1 - eps].
inline double cross_entropy(int y, double y_hat) {
  const double p = clamp_probability(y_hat);
  return -(y * std::log(p) + (1 - y) * std::log(1.0 - p));
}

// d/d y_hat of cross_entropy, at the clamped probability.
inline double cross_entropy_derivative(int y, double y_hat) {
  const double p = clamp_probability(y_hat);
  return -y / p + (1 - y) / (1.0 - p);
}

struct TrainConfig {
  std::size_t epochs = 20;
  std::size_t batch_size = 16;
  double learning_rate = 1e-2;
  double momentum = 0.0;
  double l2 = 0.0;
  double positive_weight = 1.0;
  double decision_threshold = 0.5;
  std::uint64_t seed = 0;

  void validate() const {
    if (epochs < 1) throw Error(ErrorKind::kInvalidArgument, "epochs must be >= 1");
    if (batch_size < 1) throw Error(ErrorKind::kInvalidArgument, "batch_size must be >= 1");
    if (!(learning_rate >= 0.0)) {
      throw Error(ErrorKind::kInvalidArgument, "learning_rate must be >= 0");
    }
    if (!(l2 >= 0.0)) throw Error(ErrorKind::kInvalidArgument, "l2 must be >= 0");
    if (!(momentum >= 0.0 && momentum < 1.0)) {
      throw Error(ErrorKind::kInvalidArgument, "momentum must be in [0, 1)");
    }
    if (!(positive_weight > 0.0)) {
      throw Error(ErrorKind::kInvalidArgument, "positive_weight must be > 0");
    }
    if (!(decision_threshold > 0.0 && decision_threshold < 1.0)) {
      throw Error(ErrorKind::kInvalidArgument, "decision_threshold must be in (0, 1)");
    }
  }
};

// Mean (class-weighted) cross-entropy over the examples plus l2/2 * |w|^2.
// The bias is not regularized.
inline double objective(const ClassifierModel& model, std::span<const LabeledExample> data,
                        const TrainConfig& config) {
  double loss = 0.0;
  for (const LabeledExample& e : data) {
    const double weight = e.label ? config.positive_weight : 1.0;
    loss += weight * cross_entropy(e.label, predict_probability(model, e.x));
  }
  if (!data.empty()) loss /= static_cast<double>(data.size());
  double norm = 0.0;
  for (double w : model.weights) norm += w * w;
  return loss + 0.5 * config.l2 * norm;
}

// Gradient of objective() with respect to model.parameters(). Uses
// dL/dz = (p - y) for the unclamped logistic, exact away from the clamp.
inline std::vector<double> objective_gradient(const ClassifierModel& model,
                                              std::span<const LabeledExample> data,
                                              const TrainConfig& config) {
  const std::size_t dim = model.dimension();
  std::vector<double> grad(dim + 1, 0.0);
  for (const LabeledExample& e : data) {
    const double weight = e.label ? config.positive_weight : 1.0;
    const double dz = weight * (predict_probability(model, e.x) - e.label);
    for (std::size_t i = 0; i < dim; ++i) grad[i] += dz * e.x[i];
    grad[dim] += dz;
  }
  if (!data.empty()) {
    for (double& g : grad) g /= static_cast<double>(data.size());
  }
  for (std::size_t i = 0; i < dim; ++i) grad[i] += config.l2 * model.weights[i];
  return grad;
}

inline Prf evaluate_examples(const ClassifierModel& model,
                             std::span<const LabeledExample> data) {
  std::size_t tp = 0, n_pred = 0, n_gold = 0;
  for (const LabeledExample& e : data) {
    const bool pred = predict_probability(model, e.x) > model.decision_threshold;
    n_pred += pred;
    n_gold += e.label == 1;
    tp += pred && e.label == 1;
  }
  return prf_from_counts(tp, n_pred, n_gold);
}

struct EpochRecord {
  std::size_t epoch = 0;  // 1-based
  double train_loss = 0.0;
  Prf validation;
};

struct TrainReport {
  std::vector<EpochRecord> epochs;
  std::size_t best_epoch = 0;  // 1-based
  ClassifierModel model;       // checkpoint from best_epoch
  ClassifierModel initial;     // before the first update
};

// Mini-batch gradient descent from zero weights, reshuffling each epoch from
// the seeded generator. After each epoch the full training objective and the
// validation P/R/F1 are recorded; the checkpoint with the highest validation
// F1 (earliest on ties) is returned.
inline TrainReport train(std::span<const LabeledExample> train_data,
                         std::span<const LabeledExample> validation_data,
                         const TrainConfig& config, const std::string& trained_on = "") {
  config.validate();
  if (train_data.empty()) throw Error(ErrorKind::kInvalidArgument, "train: no examples");
  const std::size_t dim = train_data.front().x.size();
  std::size_t positives = 0;
  for (const LabeledExample& e : train_data) {
    if (e.x.size() != dim) throw Error(ErrorKind::kInvalidArgument, "train: ragged features");
    positives += e.label == 1;
  }
  if (positives == 0 || positives == train_data.size()) {
    throw Error(ErrorKind::kInvalidArgument,
                "train: training data must contain both positive and negative examples");
  }

  ClassifierModel model;
  model.weights.assign(dim, 0.0);
  if (model.feature_names.size() != dim) {
    model.feature_names.clear();
    for (std::size_t i = 0; i < dim; ++i) model.feature_names.push_back("x" + std::to_string(i));
  }
  model.decision_threshold = config.decision_threshold;
  model.seed = config.seed;
  model.trained_on = trained_on;

  TrainReport report;
  report.initial = model;
  Rng rng(config.seed);
  std::vector<std::size_t> order(train_data.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<double> params = model.parameters();
  std::vector<double> velocity(params.size(), 0.0);
  std::vector<LabeledExample> batch;
  double best_f1 = -1.0;

  for (std::size_t epoch = 1; epoch <= config.epochs; ++epoch) {
    shuffle(std::span<std::size_t>(order), rng);
    for (std::size_t start = 0; start < order.size(); start += config.batch_size) {
      const std::size_t end = std::min(order.size(), start + config.batch_size);
      batch.clear();
      for (std::size_t i = start; i < end; ++i) batch.push_back(train_data[order[i]]);
      const std::vector<double> grad = objective_gradient(model, batch, config);
      for (std::size_t i = 0; i < params.size(); ++i) {
        velocity[i] = config.momentum * velocity[i] + grad[i];
        params[i] -= config.learning_rate * velocity[i];
      }
      model.set_parameters(params);
    }
    EpochRecord rec;
    rec.epoch = epoch;
    rec.train_loss = objective(model, train_data, config);
    if (!std::isfinite(rec.train_loss)) {
      throw Error(ErrorKind::kNumeric, "train: loss is not finite at epoch " + std::to_string(epoch));
    }
    rec.validation = evaluate_examples(model, validation_data);
    if (rec.validation.f1 > best_f1) {
      best_f1 = rec.validation.f1;
      report.best_epoch = epoch;
      report.model = model;
    }
    report.epochs.push_back(rec);
  }
  return report;
}

inline nlohmann::json train_report_to_json(const TrainReport& r, const TrainConfig& config) {
  nlohmann::json epochs = nlohmann::json::array(), loss = nlohmann::json::array(),
                 precision = nlohmann::json::array(), recall = nlohmann::json::array(),
                 f1 = nlohmann::json::array();
  for (const EpochRecord& e : r.epochs) {
    epochs.push_back(e.epoch);
    loss.push_back(e.train_loss);
    precision.push_back(e.validation.precision);
    recall.push_back(e.validation.recall);
    f1.push_back(e.validation.f1);
  }
  return nlohmann::json{{"epoch", epochs},
                        {"train_loss", loss},
                        {"val_precision", precision},
                        {"val_recall", recall},
                        {"val_f1", f1},
                        {"best_epoch", r.best_epoch},
                        {"config",
                         {{"epochs", config.epochs},
                          {"batch_size", config.batch_size},
                          {"learning_rate", config.learning_rate},
                          {"momentum", config.momentum},
                          {"l2", config.l2},
                          {"positive_weight", config.positive_weight},
                          {"threshold", config.decision_threshold},
                          {"seed", config.seed}}}};
}

}  // namespace convseg

#endif  // CONVSEG_TRAINING_HPP_
