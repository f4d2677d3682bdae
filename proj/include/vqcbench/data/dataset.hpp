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

#pragma once

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "vqcbench/encoding/angle.hpp"

namespace vqcbench {

/// Raised for malformed or missing input files.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Dataset {
  std::string name;
  std::vector<std::string> feature_names;
  std::vector<FeatureVector> features;  // row-major, one row per sample
  std::vector<int> labels;              // dense indices in [0, class_count)
  std::vector<double> raw_labels;       // original label values, row order
  int class_count = 0;

  std::size_t rows() const { return features.size(); }
  std::size_t cols() const { return feature_names.size(); }
};

namespace detail {

inline std::vector<std::string> split_line(const std::string &line,
                                           char delimiter) {
  std::vector<std::string> cells;
  std::string cell;
  std::stringstream stream(line);
  while (std::getline(stream, cell, delimiter)) cells.push_back(cell);
  if (!line.empty() && line.back() == delimiter) cells.emplace_back();
  return cells;
}

inline std::string trimmed(const std::string &s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

inline double parse_cell(const std::string &cell, std::size_t row,
                         const std::string &column) {
  const std::string text = trimmed(cell);
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw DataError("non-numeric cell at data row " + std::to_string(row) +
                    ", column '" + column + "': '" + text + "'");
  }
  return value;
}

}  // namespace detail

/**
 * @brief Loads a delimited numeric dataset with a header row.
 *
 * The label column is located by name; every other column becomes a feature
 * in file order. Labels are remapped to dense 0-based indices by sorted
 * distinct value. Ragged rows and non-numeric cells are reported with their
 * position.
 */
inline Dataset load_csv_dataset(const std::string &path,
                                const std::string &label_column,
                                char delimiter = ',') {
  std::ifstream file(path);
  if (!file) throw DataError("cannot open dataset file: " + path);

  std::string line;
  if (!std::getline(file, line)) {
    throw DataError("dataset file is empty: " + path);
  }
  if (!line.empty() && line.front() == '\xEF') line.erase(0, 3);  // UTF-8 BOM
  const std::vector<std::string> header = detail::split_line(line, delimiter);
  std::size_t label_index = header.size();
  Dataset dataset;
  for (std::size_t i = 0; i < header.size(); ++i) {
    const std::string name = detail::trimmed(header[i]);
    if (name == label_column) {
      label_index = i;
    } else {
      dataset.feature_names.push_back(name);
    }
  }
  if (label_index == header.size()) {
    throw DataError("label column '" + label_column + "' not found in " + path);
  }

  std::size_t row = 0;
  while (std::getline(file, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (detail::trimmed(line).empty()) continue;
    ++row;
    const auto cells = detail::split_line(line, delimiter);
    if (cells.size() != header.size()) {
      throw DataError("ragged row " + std::to_string(row) + " in " + path +
                      ": expected " + std::to_string(header.size()) +
                      " cells, got " + std::to_string(cells.size()));
    }
    FeatureVector features;
    features.reserve(header.size() - 1);
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const double value = detail::parse_cell(cells[i], row, header[i]);
      if (i == label_index) {
        dataset.raw_labels.push_back(value);
      } else {
        features.push_back(value);
      }
    }
    dataset.features.push_back(std::move(features));
  }
  if (dataset.features.empty()) {
    throw DataError("dataset has a header but no data rows: " + path);
  }

  std::vector<double> distinct = dataset.raw_labels;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()),
                 distinct.end());
  std::map<double, int> index_of;
  for (std::size_t i = 0; i < distinct.size(); ++i) {
    index_of[distinct[i]] = static_cast<int>(i);
  }
  dataset.class_count = static_cast<int>(distinct.size());
  dataset.labels.reserve(dataset.raw_labels.size());
  for (double raw : dataset.raw_labels) {
    dataset.labels.push_back(index_of[raw]);
  }
  dataset.name = path;
  return dataset;
}

}  // namespace vqcbench
