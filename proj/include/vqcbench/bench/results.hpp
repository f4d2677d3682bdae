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
 * @file results.hpp
 * Run records, aggregation, best/worst group reports, and file formats.
 *
 * Raw results live one JSON file per run (the resume unit) and export to a
 * flat CSV with two rows per run (train and test split). Metric cells use
 * 17 significant digits so a re-import reproduces aggregates bit-exactly.
 * All writes go through a temp file plus atomic rename.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "vqcbench/common/rng.hpp"
#include "vqcbench/train/metrics.hpp"

namespace vqcbench {

struct RunKey {
  std::string encoding;
  int layers = 0;
  bool reuploading = false;
  int repetition = 0;
};

/// Everything measured for one trained (model, seed) pair.
struct RunResult {
  std::string dataset;
  RunKey key;
  std::uint64_t seed = 0;
  Metrics train_metrics, test_metrics;
  std::vector<double> epoch_loss;
  double train_seconds = 0.0;
  double eval_train_seconds = 0.0;
  double eval_test_seconds = 0.0;
};

/// Deterministic per-run seed: a stable hash of the cell coordinates XORed
/// with the sweep's base seed, so any single run can be reproduced alone.
inline std::uint64_t run_seed(std::uint64_t base_seed, const RunKey &key) {
  const std::string tag = key.encoding + "|" + std::to_string(key.layers) +
                          "|" + (key.reuploading ? "1" : "0") + "|" +
                          std::to_string(key.repetition);
  return base_seed ^ fnv1a_hash(tag);
}

inline std::string run_file_name(const std::string &dataset,
                                 const RunKey &key) {
  return dataset + "__" + key.encoding + "__L" + std::to_string(key.layers) +
         "__RU" + (key.reuploading ? "1" : "0") + "__r" +
         std::to_string(key.repetition) + ".json";
}

// ---------------------------------------------------------------------------
// JSON persistence

inline nlohmann::json metrics_to_json(const Metrics &m) {
  return {{"accuracy", m.accuracy},
          {"balanced_accuracy", m.balanced_accuracy},
          {"precision", m.precision},
          {"recall", m.recall},
          {"f1", m.f1},
          {"specificity", m.specificity},
          {"degenerate", m.degenerate}};
}

inline Metrics metrics_from_json(const nlohmann::json &j) {
  Metrics m;
  m.accuracy = j.at("accuracy").get<double>();
  m.balanced_accuracy = j.at("balanced_accuracy").get<double>();
  m.precision = j.at("precision").get<double>();
  m.recall = j.at("recall").get<double>();
  m.f1 = j.at("f1").get<double>();
  m.specificity = j.at("specificity").get<double>();
  m.degenerate = j.at("degenerate").get<bool>();
  return m;
}

inline nlohmann::json run_result_to_json(const RunResult &r) {
  return {{"dataset", r.dataset},
          {"encoding", r.key.encoding},
          {"layers", r.key.layers},
          {"reuploading", r.key.reuploading},
          {"repetition", r.key.repetition},
          {"seed", r.seed},
          {"train_metrics", metrics_to_json(r.train_metrics)},
          {"test_metrics", metrics_to_json(r.test_metrics)},
          {"epoch_loss", r.epoch_loss},
          {"train_seconds", r.train_seconds},
          {"eval_train_seconds", r.eval_train_seconds},
          {"eval_test_seconds", r.eval_test_seconds}};
}

inline RunResult run_result_from_json(const nlohmann::json &j) {
  RunResult r;
  r.dataset = j.at("dataset").get<std::string>();
  r.key.encoding = j.at("encoding").get<std::string>();
  r.key.layers = j.at("layers").get<int>();
  r.key.reuploading = j.at("reuploading").get<bool>();
  r.key.repetition = j.at("repetition").get<int>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.train_metrics = metrics_from_json(j.at("train_metrics"));
  r.test_metrics = metrics_from_json(j.at("test_metrics"));
  r.epoch_loss = j.at("epoch_loss").get<std::vector<double>>();
  r.train_seconds = j.at("train_seconds").get<double>();
  r.eval_train_seconds = j.at("eval_train_seconds").get<double>();
  r.eval_test_seconds = j.at("eval_test_seconds").get<double>();
  return r;
}

/// Writes text to `path` via temp file + rename, so readers never observe a
/// partial file.
inline void atomic_write_text(const std::filesystem::path &path,
                              const std::string &text) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw std::runtime_error("cannot open for writing: " + tmp.string());
    }
    out << text;
    if (!out.flush()) {
      throw std::runtime_error("write failed: " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, path);
}

inline void save_run_result(const std::filesystem::path &dir,
                            const RunResult &result) {
  atomic_write_text(dir / run_file_name(result.dataset, result.key),
                    run_result_to_json(result).dump(1) + "\n");
}

inline RunResult load_run_result(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open run file: " + path.string());
  nlohmann::json j;
  in >> j;
  return run_result_from_json(j);
}

// ---------------------------------------------------------------------------
// Flat CSV rows

/// One exported CSV row: a run seen from one split.
struct RunRow {
  std::string dataset, encoding;
  int layers = 0;
  bool reuploading = false;
  std::uint64_t seed = 0;
  std::string split;  // "train" or "test"
  double accuracy = 0, balanced_accuracy = 0, precision = 0, recall = 0,
         f1 = 0;
  double train_seconds = 0, eval_train_seconds = 0, eval_test_seconds = 0;
  int repetition = 0;  // not exported; kept for sorting
};

inline const char *kRunsCsvHeader =
    "dataset,encoding,layers,reuploading,seed,split,accuracy,"
    "balanced_accuracy,precision,recall,f1,train_seconds,eval_train_seconds,"
    "eval_test_seconds";

inline std::vector<RunRow> rows_from_results(
    std::span<const RunResult> results) {
  std::vector<RunRow> rows;
  rows.reserve(results.size() * 2);
  for (const RunResult &r : results) {
    for (const char *split : {"train", "test"}) {
      const Metrics &m =
          split == std::string("train") ? r.train_metrics : r.test_metrics;
      RunRow row;
      row.dataset = r.dataset;
      row.encoding = r.key.encoding;
      row.layers = r.key.layers;
      row.reuploading = r.key.reuploading;
      row.repetition = r.key.repetition;
      row.seed = r.seed;
      row.split = split;
      row.accuracy = m.accuracy;
      row.balanced_accuracy = m.balanced_accuracy;
      row.precision = m.precision;
      row.recall = m.recall;
      row.f1 = m.f1;
      row.train_seconds = r.train_seconds;
      row.eval_train_seconds = r.eval_train_seconds;
      row.eval_test_seconds = r.eval_test_seconds;
      rows.push_back(std::move(row));
    }
  }
  std::sort(rows.begin(), rows.end(), [](const RunRow &a, const RunRow &b) {
    return std::tie(a.dataset, a.encoding, a.layers, a.reuploading,
                    a.repetition, a.split) <
           std::tie(b.dataset, b.encoding, b.layers, b.reuploading,
                    b.repetition, b.split);
  });
  return rows;
}

namespace detail {

inline std::string full_precision(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace detail

inline std::string runs_csv_text(std::span<const RunRow> rows) {
  std::string text = kRunsCsvHeader;
  text += '\n';
  for (const RunRow &r : rows) {
    text += r.dataset + ',' + r.encoding + ',' + std::to_string(r.layers) +
            ',' + (r.reuploading ? "true" : "false") + ',' +
            std::to_string(r.seed) + ',' + r.split + ',' +
            detail::full_precision(r.accuracy) + ',' +
            detail::full_precision(r.balanced_accuracy) + ',' +
            detail::full_precision(r.precision) + ',' +
            detail::full_precision(r.recall) + ',' +
            detail::full_precision(r.f1) + ',' +
            detail::full_precision(r.train_seconds) + ',' +
            detail::full_precision(r.eval_train_seconds) + ',' +
            detail::full_precision(r.eval_test_seconds) + '\n';
  }
  return text;
}

inline std::vector<RunRow> parse_runs_csv(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open runs CSV: " + path.string());
  std::string line;
  if (!std::getline(in, line) ||
      line.substr(0, std::string(kRunsCsvHeader).size()) != kRunsCsvHeader) {
    throw std::runtime_error("unexpected runs CSV header in " + path.string());
  }
  std::vector<RunRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream stream(line);
    std::string cell;
    while (std::getline(stream, cell, ',')) cells.push_back(cell);
    if (cells.size() != 14) {
      throw std::runtime_error("malformed runs CSV row: " + line);
    }
    RunRow r;
    r.dataset = cells[0];
    r.encoding = cells[1];
    r.layers = std::stoi(cells[2]);
    r.reuploading = cells[3] == "true";
    r.seed = std::stoull(cells[4]);
    r.split = cells[5];
    r.accuracy = std::stod(cells[6]);
    r.balanced_accuracy = std::stod(cells[7]);
    r.precision = std::stod(cells[8]);
    r.recall = std::stod(cells[9]);
    r.f1 = std::stod(cells[10]);
    r.train_seconds = std::stod(cells[11]);
    r.eval_train_seconds = std::stod(cells[12]);
    r.eval_test_seconds = std::stod(cells[13]);
    rows.push_back(std::move(r));
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Aggregation

struct StatPair {
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation, n-1 denominator
  int n = 0;
};

inline StatPair stat_pair(std::span<const double> values) {
  StatPair s;
  s.n = static_cast<int>(values.size());
  if (s.n == 0) return s;
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / s.n;
  if (s.n < 2) return s;
  double sq = 0.0;
  for (double v : values) sq += (v - s.mean) * (v - s.mean);
  s.stddev = std::sqrt(sq / (s.n - 1));
  return s;
}

/// Mean and sample deviation of every metric and timing for one model cell.
struct ModelAggregate {
  std::string dataset, encoding;
  int layers = 0;
  bool reuploading = false;
  std::map<std::string, StatPair> values;
};

inline const std::vector<std::string> &aggregate_value_names() {
  static const std::vector<std::string> names = {
      "accuracy",      "balanced_accuracy",  "precision",
      "recall",        "f1",                 "train_seconds",
      "eval_train_seconds", "eval_test_seconds"};
  return names;
}

/// Groups rows of one split by (dataset, encoding, layers, reuploading).
inline std::vector<ModelAggregate> aggregate_rows(std::span<const RunRow> rows,
                                                  const std::string &split) {
  std::map<std::tuple<std::string, std::string, int, bool>,
           std::map<std::string, std::vector<double>>>
      groups;
  for (const RunRow &r : rows) {
    if (r.split != split) continue;
    auto &bucket = groups[{r.dataset, r.encoding, r.layers, r.reuploading}];
    bucket["accuracy"].push_back(r.accuracy);
    bucket["balanced_accuracy"].push_back(r.balanced_accuracy);
    bucket["precision"].push_back(r.precision);
    bucket["recall"].push_back(r.recall);
    bucket["f1"].push_back(r.f1);
    bucket["train_seconds"].push_back(r.train_seconds);
    bucket["eval_train_seconds"].push_back(r.eval_train_seconds);
    bucket["eval_test_seconds"].push_back(r.eval_test_seconds);
  }
  std::vector<ModelAggregate> aggregates;
  for (auto &[key, bucket] : groups) {
    ModelAggregate agg;
    agg.dataset = std::get<0>(key);
    agg.encoding = std::get<1>(key);
    agg.layers = std::get<2>(key);
    agg.reuploading = std::get<3>(key);
    for (auto &[name, values] : bucket) {
      agg.values[name] = stat_pair(values);
    }
    aggregates.push_back(std::move(agg));
  }
  return aggregates;
}

inline std::vector<ModelAggregate> aggregate(
    std::span<const RunResult> results, const std::string &split = "test") {
  return aggregate_rows(rows_from_results(results), split);
}

// ---------------------------------------------------------------------------
// Best/worst group report

/// One encoding's aggregated score for a chosen metric.
struct AggregateRow {
  std::string encoding;
  int layers = 0;
  bool reuploading = false;
  double mean = 0.0;
  double stddev = 0.0;
};

inline std::vector<AggregateRow> metric_rows(
    std::span<const ModelAggregate> aggregates, const std::string &metric) {
  std::vector<AggregateRow> rows;
  rows.reserve(aggregates.size());
  for (const ModelAggregate &agg : aggregates) {
    const auto it = agg.values.find(metric);
    if (it == agg.values.end()) {
      throw std::invalid_argument("metric not aggregated: " + metric);
    }
    rows.push_back({agg.encoding, agg.layers, agg.reuploading, it->second.mean,
                    it->second.stddev});
  }
  return rows;
}

/// Paper-style comparison row for one (layers, reuploading) group.
struct GroupReport {
  int layers = 0;
  bool reuploading = false;
  std::string best_encoding, worst_encoding;
  double best_mean = 0, best_std = 0;
  double worst_mean = 0, worst_std = 0;
  double delta = 0;      // best_mean - worst_mean, >= 0
  double delta_std = 0;  // sqrt(best_std^2 + worst_std^2)
};

/**
 * @brief Best and worst encoding per (layers, reuploading) group.
 *
 * Ties on the mean break lexicographically by encoding name. Units follow
 * the input rows (the formulas are scale-equivariant), so paper fixtures in
 * percent and pipeline aggregates in fractions both work.
 */
inline std::vector<GroupReport> best_worst_report(
    std::span<const AggregateRow> rows) {
  std::map<std::pair<int, bool>, std::vector<const AggregateRow *>> groups;
  for (const AggregateRow &row : rows) {
    groups[{row.layers, row.reuploading}].push_back(&row);
  }
  std::vector<GroupReport> reports;
  for (auto &[key, members] : groups) {
    auto better = [](const AggregateRow *a, const AggregateRow *b) {
      if (a->mean != b->mean) return a->mean > b->mean;
      return a->encoding < b->encoding;
    };
    auto worse = [](const AggregateRow *a, const AggregateRow *b) {
      if (a->mean != b->mean) return a->mean < b->mean;
      return a->encoding < b->encoding;
    };
    const AggregateRow *best = members.front();
    const AggregateRow *worst = members.front();
    for (const AggregateRow *row : members) {
      if (better(row, best)) best = row;
      if (worse(row, worst)) worst = row;
    }
    GroupReport report;
    report.layers = key.first;
    report.reuploading = key.second;
    report.best_encoding = best->encoding;
    report.best_mean = best->mean;
    report.best_std = best->stddev;
    report.worst_encoding = worst->encoding;
    report.worst_mean = worst->mean;
    report.worst_std = worst->stddev;
    report.delta = best->mean - worst->mean;
    report.delta_std =
        std::sqrt(best->stddev * best->stddev + worst->stddev * worst->stddev);
    reports.push_back(std::move(report));
  }
  return reports;
}

// ---------------------------------------------------------------------------
// File exports

inline std::string aggregates_csv_text(
    std::span<const ModelAggregate> aggregates) {
  std::string text = "dataset,encoding,layers,reuploading,n,value,mean,std\n";
  for (const ModelAggregate &agg : aggregates) {
    for (const std::string &name : aggregate_value_names()) {
      const StatPair &s = agg.values.at(name);
      text += agg.dataset + ',' + agg.encoding + ',' +
              std::to_string(agg.layers) + ',' +
              (agg.reuploading ? "true" : "false") + ',' + std::to_string(s.n) +
              ',' + name + ',' + detail::full_precision(s.mean) + ',' +
              detail::full_precision(s.stddev) + '\n';
    }
  }
  return text;
}

/// Group-report CSV mirroring the paper's table layout; values in percent.
inline std::string group_report_csv_text(std::span<const GroupReport> reports,
                                         double scale_to_percent = 100.0) {
  std::string text =
      "layers,reuploading,best_encoding,best_pct,best_std_pct,"
      "worst_encoding,worst_pct,worst_std_pct,delta_pct,delta_std_pct\n";
  char buf[256];
  for (const GroupReport &r : reports) {
    std::snprintf(buf, sizeof(buf),
                  "%d,%s,%s,%.6f,%.6f,%s,%.6f,%.6f,%.6f,%.6f\n", r.layers,
                  r.reuploading ? "true" : "false", r.best_encoding.c_str(),
                  r.best_mean * scale_to_percent, r.best_std * scale_to_percent,
                  r.worst_encoding.c_str(), r.worst_mean * scale_to_percent,
                  r.worst_std * scale_to_percent, r.delta * scale_to_percent,
                  r.delta_std * scale_to_percent);
    text += buf;
  }
  return text;
}

}  // namespace vqcbench
