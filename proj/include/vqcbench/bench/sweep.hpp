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
 * @file sweep.hpp
 * Grid sweep over (encoding x layers x re-uploading x repetition).
 *
 * Runs are independent tasks on a small worker pool; every completed run is
 * streamed to its own JSON file through a serialized sink, which makes an
 * interrupted sweep resumable by skipping files that already exist. Exports
 * are sorted canonically, so the final CSV does not depend on completion
 * order or thread count.
 */
#pragma once

#include <atomic>
#include <chrono>
#include <filesystem>
#include <functional>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "vqcbench/ansatz/model.hpp"
#include "vqcbench/bench/results.hpp"
#include "vqcbench/data/pipeline.hpp"
#include "vqcbench/encoding/strategy.hpp"
#include "vqcbench/train/trainer.hpp"

namespace vqcbench {

struct SweepConfig {
  std::string dataset_name;
  std::string dataset_path;
  std::string label_column;
  int num_qubits = 0;  // 0 = ceil(log2(feature count))
  std::vector<EncodingSpec> encodings;  // empty = 20 angle + Amplitude
  std::vector<int> layer_grid = {2, 4, 6, 8, 10};
  std::vector<bool> reuploading = {false, true};
  int repetitions = 10;
  std::uint64_t base_seed = 0;
  TrainConfig train;       // per-run seed is filled in by the sweep
  std::uint64_t split_seed = 0;
  double split_fraction = 0.8;
  std::string output_dir;
  int threads = 0;  // 0 = hardware concurrency
};

inline std::vector<EncodingSpec> default_sweep_encodings() {
  std::vector<EncodingSpec> encodings = enumerate_angle_strategies();
  encodings.push_back(amplitude_spec());
  return encodings;
}

/// Parses the versioned JSON sweep configuration (see the README schema).
inline SweepConfig sweep_config_from_json(const nlohmann::json &j) {
  if (!j.contains("version") || j.at("version").get<int>() != 1) {
    throw std::invalid_argument("sweep config: expected \"version\": 1");
  }
  SweepConfig config;
  const auto &dataset = j.at("dataset");
  config.dataset_path = dataset.at("path").get<std::string>();
  config.label_column = dataset.at("label_column").get<std::string>();
  config.dataset_name = dataset.value(
      "name", std::filesystem::path(config.dataset_path).stem().string());
  config.num_qubits = j.value("num_qubits", 0);
  if (j.contains("encodings")) {
    for (const auto &name : j.at("encodings")) {
      config.encodings.push_back(encoding_from_name(name.get<std::string>()));
    }
  }
  if (j.contains("layers")) {
    config.layer_grid = j.at("layers").get<std::vector<int>>();
  }
  if (j.contains("reuploading")) {
    config.reuploading = j.at("reuploading").get<std::vector<bool>>();
  }
  config.repetitions = j.value("repetitions", 10);
  config.base_seed = j.value("base_seed", std::uint64_t{0});
  if (j.contains("train")) {
    const auto &t = j.at("train");
    config.train.learning_rate = t.value("learning_rate", 0.01);
    config.train.epochs = t.value("epochs", 30);
    config.train.batch_size = t.value("batch_size", 10);
  }
  if (j.contains("split")) {
    config.split_fraction = j.at("split").value("fraction", 0.8);
    config.split_seed = j.at("split").value("seed", std::uint64_t{0});
  }
  config.threads = j.value("threads", 0);
  if (config.layer_grid.empty() || config.repetitions < 1) {
    throw std::invalid_argument("sweep config: empty grid or repetitions < 1");
  }
  return config;
}

inline SweepConfig load_sweep_config(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open sweep config: " + path.string());
  }
  nlohmann::json j;
  in >> j;
  return sweep_config_from_json(j);
}

struct RunFailure {
  RunKey key;
  std::string message;
};

struct SweepOutcome {
  std::vector<RunResult> results;
  std::vector<RunFailure> failures;
};

/// Dataset prepared once per encoding family and shared read-only by workers.
struct SweepData {
  Dataset dataset;
  PreparedData angle, amplitude;
  int num_qubits = 0;
  int num_classes = 0;
};

inline SweepData load_sweep_data(const SweepConfig &config) {
  SweepData data;
  data.dataset = load_csv_dataset(config.dataset_path, config.label_column);
  data.num_classes = data.dataset.class_count;
  int qubits = config.num_qubits;
  if (qubits == 0) {
    qubits = 1;
    while ((std::size_t{1} << qubits) < data.dataset.cols()) ++qubits;
  }
  data.num_qubits = qubits;
  PipelineSpec pipeline;
  pipeline.target_dim = qubits;
  pipeline.split_fraction = config.split_fraction;
  pipeline.seed = config.split_seed;
  data.angle = prepare(data.dataset, EncodingFamily::Angle, pipeline);
  data.amplitude = prepare(data.dataset, EncodingFamily::Amplitude, pipeline);
  return data;
}

/// Trains and scores a single grid cell.
inline RunResult execute_run(const SweepConfig &config, const SweepData &data,
                             const EncodingSpec &encoding, int layers,
                             bool reuploading, int repetition) {
  RunResult result;
  result.dataset = config.dataset_name;
  result.key = {encoding.name, layers, reuploading, repetition};
  result.seed = run_seed(config.base_seed, result.key);

  const PreparedData &prepared =
      encoding.family == EncodingFamily::Amplitude ? data.amplitude
                                                   : data.angle;
  ModelConfig model;
  model.encoding = encoding;
  model.num_qubits = data.num_qubits;
  model.layers = layers;
  model.reuploading = reuploading;
  model.num_classes = data.num_classes;

  TrainConfig tc = config.train;
  tc.seed = result.seed;

  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();
  const TrainResult trained = train_model(model, prepared.train, tc);
  const auto t1 = clock::now();
  const EvaluatedMetrics on_train =
      evaluate_metrics(model, trained.params, prepared.train);
  const auto t2 = clock::now();
  const EvaluatedMetrics on_test =
      evaluate_metrics(model, trained.params, prepared.test);
  const auto t3 = clock::now();

  result.train_metrics = on_train.metrics;
  result.test_metrics = on_test.metrics;
  result.epoch_loss.reserve(trained.history.size());
  for (const EpochStats &e : trained.history) {
    result.epoch_loss.push_back(e.loss);
  }
  const auto seconds = [](auto a, auto b) {
    return std::chrono::duration<double>(b - a).count();
  };
  result.train_seconds = seconds(t0, t1);
  result.eval_train_seconds = seconds(t1, t2);
  result.eval_test_seconds = seconds(t2, t3);
  return result;
}

/**
 * @brief Runs the full grid.
 *
 * With `resume`, cells whose result file already parses are loaded instead
 * of recomputed. Failures are collected per run and never abort the sweep.
 * An optional progress callback receives (completed, total) under the sink
 * lock.
 */
inline SweepOutcome run_sweep(
    const SweepConfig &config, bool resume = false,
    const std::function<void(std::size_t, std::size_t)> &progress = {}) {
  const std::vector<EncodingSpec> encodings =
      config.encodings.empty() ? default_sweep_encodings() : config.encodings;
  const SweepData data = load_sweep_data(config);

  const std::filesystem::path run_dir =
      std::filesystem::path(config.output_dir) / "runs";
  std::filesystem::create_directories(run_dir);

  struct Task {
    const EncodingSpec *encoding;
    int layers;
    bool reuploading;
    int repetition;
  };
  std::vector<Task> tasks;
  for (const EncodingSpec &encoding : encodings) {
    for (int layers : config.layer_grid) {
      for (bool ru : config.reuploading) {
        for (int rep = 0; rep < config.repetitions; ++rep) {
          tasks.push_back({&encoding, layers, ru, rep});
        }
      }
    }
  }

  SweepOutcome outcome;
  std::mutex sink;  // serializes result persistence and collection
  std::atomic<std::size_t> next{0};
  std::size_t completed = 0;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      const Task &task = tasks[i];
      const RunKey key{task.encoding->name, task.layers, task.reuploading,
                       task.repetition};
      const std::filesystem::path file =
          run_dir / run_file_name(config.dataset_name, key);
      try {
        std::optional<RunResult> result;
        if (resume && std::filesystem::exists(file)) {
          try {
            result = load_run_result(file);
          } catch (const std::exception &) {
            result.reset();  // unreadable file: recompute
          }
        }
        if (!result) {
          result = execute_run(config, data, *task.encoding, task.layers,
                               task.reuploading, task.repetition);
          std::lock_guard<std::mutex> lock(sink);
          save_run_result(run_dir, *result);
          outcome.results.push_back(std::move(*result));
          if (progress) progress(++completed, tasks.size());
          continue;
        }
        std::lock_guard<std::mutex> lock(sink);
        outcome.results.push_back(std::move(*result));
        if (progress) progress(++completed, tasks.size());
      } catch (const std::exception &e) {
        std::lock_guard<std::mutex> lock(sink);
        outcome.failures.push_back({key, e.what()});
        if (progress) progress(++completed, tasks.size());
      }
    }
  };

  int thread_count = config.threads;
  if (thread_count <= 0) {
    thread_count = static_cast<int>(std::thread::hardware_concurrency());
  }
  thread_count = std::max(1, std::min<int>(thread_count,
                                           static_cast<int>(tasks.size())));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(thread_count));
  for (int t = 0; t < thread_count; ++t) pool.emplace_back(worker);
  for (std::thread &t : pool) t.join();
  return outcome;
}

/// Config hash recorded in the manifest: FNV-1a over the canonical dump.
inline std::uint64_t sweep_config_hash(const nlohmann::json &config_json) {
  return fnv1a_hash(config_json.dump());
}

/**
 * @brief Writes runs.csv, aggregates.csv, report_<metric>.csv, and
 * manifest.json into the output directory.
 */
inline void export_results(const SweepConfig &config,
                           const nlohmann::json &config_json,
                           std::span<const RunResult> results,
                           const std::string &report_metric = "accuracy") {
  const std::filesystem::path out_dir(config.output_dir);
  std::filesystem::create_directories(out_dir);
  const std::vector<RunRow> rows = rows_from_results(results);
  atomic_write_text(out_dir / "runs.csv", runs_csv_text(rows));

  std::string aggregates_text =
      "split,dataset,encoding,layers,reuploading,n,value,mean,std\n";
  for (const char *split : {"train", "test"}) {
    for (const ModelAggregate &agg : aggregate_rows(rows, split)) {
      for (const std::string &name : aggregate_value_names()) {
        const StatPair &s = agg.values.at(name);
        aggregates_text += std::string(split) + ',' + agg.dataset + ',' +
                           agg.encoding + ',' + std::to_string(agg.layers) +
                           ',' + (agg.reuploading ? "true" : "false") + ',' +
                           std::to_string(s.n) + ',' + name + ',' +
                           detail::full_precision(s.mean) + ',' +
                           detail::full_precision(s.stddev) + '\n';
      }
    }
  }
  atomic_write_text(out_dir / "aggregates.csv", aggregates_text);

  const auto test_aggregates = aggregate_rows(rows, "test");
  const auto reports =
      best_worst_report(metric_rows(test_aggregates, report_metric));
  atomic_write_text(out_dir / ("report_" + report_metric + ".csv"),
                    group_report_csv_text(reports));

  nlohmann::json manifest;
  manifest["schema_version"] = 1;
  manifest["tool"] = "vqcbench";
  manifest["tool_version"] = "0.1.0";
  manifest["config"] = config_json;
  manifest["config_hash"] = sweep_config_hash(config_json);
  manifest["base_seed"] = config.base_seed;
  manifest["split_seed"] = config.split_seed;
  manifest["dataset"] = {{"name", config.dataset_name},
                         {"path", config.dataset_path},
                         {"label_column", config.label_column}};
  manifest["runs"] = results.size();
  atomic_write_text(out_dir / "manifest.json", manifest.dump(1) + "\n");
}

}  // namespace vqcbench
