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
 * @file auto_select.hpp
 * Staged model selection: start with the single-rotation embeddings and
 * escalate to gate-richer stages only while the running best stays below
 * the target, carrying the best model found so far.
 */
#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "vqcbench/bench/results.hpp"
#include "vqcbench/bench/sweep.hpp"

namespace vqcbench {

struct AutoSelectConfig {
  std::string dataset_name;
  std::string dataset_path;
  std::string label_column;
  int num_qubits = 0;          // 0 = derive from feature count
  double threshold = 0.75;     // stop once best mean test metric reaches this
  std::string metric = "accuracy";
  std::vector<int> layer_grid = {2, 4, 6, 8, 10};
  int repetitions = 10;
  std::uint64_t base_seed = 0;
  std::uint64_t split_seed = 0;
  double split_fraction = 0.8;
  TrainConfig train;
  long budget = -1;  // maximum trained runs; -1 = unlimited
};

struct StageDecision {
  int stage = 0;  // 1..4, by encoding gate count
  std::vector<std::string> encodings;
  int runs_used = 0;
  std::string best_encoding;
  int best_layers = 0;
  double best_metric = 0.0;
  bool met_threshold = false;
};

struct AutoSelectResult {
  ModelConfig recommended;
  double best_metric = 0.0;
  bool truncated = false;  // budget ran out before a stage could start
  std::vector<StageDecision> audit;
};

/// The 20-strategy catalog bucketed by tag count (stages 1..4).
inline std::vector<std::vector<EncodingSpec>> encoding_stages() {
  std::vector<std::vector<EncodingSpec>> stages(4);
  for (const EncodingSpec &spec : enumerate_angle_strategies()) {
    stages[spec.gate_tags.size() - 1].push_back(spec);
  }
  return stages;
}

/**
 * @brief Runs the staged selection.
 *
 * Every stage trains its encodings over the layer grid (no re-uploading)
 * with `repetitions` seeds each, scores the mean test metric per model, and
 * stops as soon as the running best reaches the threshold. Exhausting the
 * run budget mid-way returns the best so far with `truncated` set; a budget
 * smaller than stage 1 is rejected outright.
 */
inline AutoSelectResult auto_select(const AutoSelectConfig &config) {
  const auto stages = encoding_stages();
  const long stage1_cost = static_cast<long>(stages[0].size()) *
                           static_cast<long>(config.layer_grid.size()) *
                           config.repetitions;
  if (config.budget >= 0 && config.budget < stage1_cost) {
    throw std::invalid_argument(
        "auto_select: budget below the stage-1 cost of " +
        std::to_string(stage1_cost) + " runs");
  }

  SweepConfig sweep;
  sweep.dataset_name = config.dataset_name;
  sweep.dataset_path = config.dataset_path;
  sweep.label_column = config.label_column;
  sweep.num_qubits = config.num_qubits;
  sweep.base_seed = config.base_seed;
  sweep.train = config.train;
  sweep.split_seed = config.split_seed;
  sweep.split_fraction = config.split_fraction;
  const SweepData data = load_sweep_data(sweep);

  AutoSelectResult result;
  result.best_metric = -1.0;
  long runs_used = 0;

  for (std::size_t stage_idx = 0; stage_idx < stages.size(); ++stage_idx) {
    const auto &stage_encodings = stages[stage_idx];
    const long stage_cost = static_cast<long>(stage_encodings.size()) *
                            static_cast<long>(config.layer_grid.size()) *
                            config.repetitions;
    if (config.budget >= 0 && runs_used + stage_cost > config.budget) {
      result.truncated = true;
      break;
    }

    StageDecision decision;
    decision.stage = static_cast<int>(stage_idx) + 1;
    std::vector<RunResult> stage_results;
    for (const EncodingSpec &encoding : stage_encodings) {
      decision.encodings.push_back(encoding.name);
      for (int layers : config.layer_grid) {
        for (int rep = 0; rep < config.repetitions; ++rep) {
          stage_results.push_back(execute_run(sweep, data, encoding, layers,
                                              /*reuploading=*/false, rep));
          ++runs_used;
        }
      }
    }
    decision.runs_used = static_cast<int>(stage_cost);

    decision.best_metric = -1.0;
    for (const ModelAggregate &agg : aggregate(stage_results, "test")) {
      const double mean = agg.values.at(config.metric).mean;
      if (mean > decision.best_metric ||
          (mean == decision.best_metric &&
           agg.encoding < decision.best_encoding)) {
        decision.best_metric = mean;
        decision.best_encoding = agg.encoding;
        decision.best_layers = agg.layers;
      }
    }
    if (decision.best_metric > result.best_metric) {
      result.best_metric = decision.best_metric;
      result.recommended.encoding = encoding_from_name(decision.best_encoding);
      result.recommended.num_qubits = data.num_qubits;
      result.recommended.layers = decision.best_layers;
      result.recommended.reuploading = false;
      result.recommended.num_classes = data.num_classes;
    }
    decision.met_threshold = result.best_metric >= config.threshold;
    result.audit.push_back(std::move(decision));
    if (result.audit.back().met_threshold) break;
  }
  return result;
}

}  // namespace vqcbench
