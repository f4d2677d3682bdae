// Copyright 2026 The vqcbench developers
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

/**
 * @file trainer.hpp
 * Mini-batch Adam training of one classifier model, plus evaluation.
 *
 * Determinism contract: a fixed (config, TrainConfig) pair reproduces the
 * same parameters and history bit for bit. One seeded generator drives the
 * parameter initialization and every epoch reshuffle; per-sample gradients
 * inside a batch are summed in sample order.
 */
#pragma once

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "vqcbench/ansatz/model.hpp"
#include "vqcbench/autodiff/gradient.hpp"
#include "vqcbench/common/rng.hpp"
#include "vqcbench/train/adam.hpp"
#include "vqcbench/train/measurement.hpp"
#include "vqcbench/train/metrics.hpp"

namespace vqcbench {

struct TrainConfig {
  double learning_rate = 0.01;
  int epochs = 30;
  int batch_size = 10;
  int repetitions = 10;  // used by the sweep layer, not by train_model
  std::uint64_t seed = 0;
};

struct LabeledData {
  std::vector<FeatureVector> features;
  std::vector<int> labels;

  std::size_t size() const { return features.size(); }
};

struct EpochStats {
  double loss = 0.0;      // mean per-sample loss seen during the epoch
  double accuracy = 0.0;  // fraction predicted correctly at gradient time
};

struct TrainResult {
  std::vector<double> params;
  std::vector<EpochStats> history;
};

/**
 * @brief Trains one model: uniform [0, 2pi) initialization, reshuffled
 * mini-batches, one Adam step per batch on the batch-mean gradient.
 *
 * The final batch of an epoch may be smaller than batch_size. History holds
 * exactly `epochs` entries; epochs = 0 returns the initial parameters.
 */
inline TrainResult train_model(const ModelConfig &config,
                               const LabeledData &train_set,
                               const TrainConfig &tc) {
  if (train_set.size() == 0) {
    throw std::invalid_argument("train_model: empty training set");
  }
  if (train_set.features.size() != train_set.labels.size()) {
    throw std::invalid_argument("train_model: feature/label count mismatch");
  }
  if (tc.batch_size < 1 || tc.learning_rate <= 0.0 || tc.epochs < 0) {
    throw std::invalid_argument("train_model: invalid training config");
  }

  Rng rng(tc.seed);
  const int n_params = param_count(config);
  TrainResult result;
  result.params.resize(static_cast<std::size_t>(n_params));
  for (double &p : result.params) p = rng.uniform(0.0, 2.0 * std::numbers::pi);

  AdamState adam = AdamState::zeros(result.params.size());
  std::vector<std::size_t> order(train_set.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<double> batch_grad(result.params.size());
  int step = 0;

  for (int epoch = 0; epoch < tc.epochs; ++epoch) {
    rng.shuffle(order);
    double loss_sum = 0.0;
    std::size_t correct = 0;
    for (std::size_t start = 0; start < order.size();
         start += static_cast<std::size_t>(tc.batch_size)) {
      const std::size_t stop =
          std::min(order.size(), start + static_cast<std::size_t>(tc.batch_size));
      std::fill(batch_grad.begin(), batch_grad.end(), 0.0);
      for (std::size_t i = start; i < stop; ++i) {
        const std::size_t sample = order[i];
        const LossSpec loss{config.num_classes, train_set.labels[sample]};
        const LossGradient lg = adjoint_gradient(
            config, train_set.features[sample], result.params, loss);
        for (std::size_t k = 0; k < batch_grad.size(); ++k) {
          batch_grad[k] += lg.grad[k];
        }
        loss_sum += lg.value;
        if (label_from_readout(lg.readout, config.num_classes) ==
            train_set.labels[sample]) {
          ++correct;
        }
      }
      const double inv_batch = 1.0 / static_cast<double>(stop - start);
      for (double &g : batch_grad) g *= inv_batch;
      adam_step(result.params, batch_grad, adam, ++step, tc.learning_rate);
    }
    result.history.push_back(
        {loss_sum / static_cast<double>(order.size()),
         static_cast<double>(correct) / static_cast<double>(order.size())});
  }
  return result;
}

struct EvaluatedMetrics {
  Metrics metrics;
  std::vector<ConfusionMatrix> per_class;
};

/// Runs the trained model over a dataset and scores the predictions.
inline EvaluatedMetrics evaluate_metrics(const ModelConfig &config,
                                         std::span<const double> params,
                                         const LabeledData &dataset) {
  if (dataset.size() == 0) {
    throw std::invalid_argument("evaluate_metrics: empty dataset");
  }
  std::vector<int> predictions;
  predictions.reserve(dataset.size());
  for (const FeatureVector &row : dataset.features) {
    predictions.push_back(
        predict(build_and_run(config, row, params), config.num_classes).label);
  }
  EvaluatedMetrics out;
  out.per_class =
      tally_confusion(predictions, dataset.labels, config.num_classes);
  if (config.num_classes == 2) {
    const ConfusionMatrix positive = out.per_class[1];
    out.metrics =
        metrics_from_confusion(std::span<const ConfusionMatrix>(&positive, 1));
  } else {
    out.metrics = metrics_from_confusion(out.per_class);
  }
  return out;
}

}  // namespace vqcbench
