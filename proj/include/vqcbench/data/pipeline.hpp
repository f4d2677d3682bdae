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
 * @file pipeline.hpp
 * Dataset preparation: [0, pi] min-max scaling, PCA reduction, stratified
 * train/test splitting, and the per-family feature pipelines. Every
 * transform is fitted on the training split only and then applied to the
 * test split.
 */
#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cfenv>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "vqcbench/common/rng.hpp"
#include "vqcbench/data/dataset.hpp"
#include "vqcbench/encoding/amplitude.hpp"
#include "vqcbench/train/trainer.hpp"

namespace vqcbench {

/// Fitted per-feature affine map onto [0, pi].
struct MinMaxScaler {
  std::vector<double> min, max;
  double hi = std::numbers::pi;
};

inline MinMaxScaler fit_minmax(const std::vector<FeatureVector> &train,
                               double hi = std::numbers::pi) {
  if (train.empty()) throw std::invalid_argument("fit_minmax: empty input");
  MinMaxScaler scaler;
  scaler.hi = hi;
  scaler.min = train[0];
  scaler.max = train[0];
  for (const FeatureVector &row : train) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      scaler.min[c] = std::min(scaler.min[c], row[c]);
      scaler.max[c] = std::max(scaler.max[c], row[c]);
    }
  }
  return scaler;
}

/// Train min -> 0, train max -> hi; out-of-range values clamp into [0, hi];
/// a constant feature maps to hi/2.
inline std::vector<FeatureVector> apply_minmax(
    const MinMaxScaler &scaler, const std::vector<FeatureVector> &rows) {
  std::vector<FeatureVector> out = rows;
  for (FeatureVector &row : out) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      const double span = scaler.max[c] - scaler.min[c];
      row[c] = span > 0.0
                   ? std::clamp((row[c] - scaler.min[c]) / span, 0.0, 1.0) *
                         scaler.hi
                   : scaler.hi / 2.0;
    }
  }
  return out;
}

struct ScaledSplit {
  std::vector<FeatureVector> train, applied;
  MinMaxScaler scaler;
};

inline ScaledSplit minmax_scale(const std::vector<FeatureVector> &train,
                                const std::vector<FeatureVector> &apply_to,
                                double hi = std::numbers::pi) {
  ScaledSplit out;
  out.scaler = fit_minmax(train, hi);
  out.train = apply_minmax(out.scaler, train);
  out.applied = apply_minmax(out.scaler, apply_to);
  return out;
}

/// Fitted PCA projection: rows of `components` are orthonormal directions in
/// descending eigenvalue order.
struct PcaModel {
  std::vector<double> mean;
  std::vector<FeatureVector> components;
  std::vector<double> eigenvalues;
};

/**
 * @brief Fits PCA on the training block.
 *
 * Mean-centers, eigendecomposes the sample covariance, and keeps the top
 * `target_dim` eigenvectors. Sign convention: the largest-magnitude entry of
 * each component is made positive. Components whose eigenvalue falls below
 * 1e-12 of the largest are unusable; asking for more than the usable count
 * is an error.
 */
inline PcaModel fit_pca(const std::vector<FeatureVector> &train,
                        int target_dim) {
  const std::size_t rows = train.size();
  if (rows < 2) throw std::invalid_argument("fit_pca: need at least 2 rows");
  const std::size_t cols = train[0].size();
  if (target_dim < 1 || static_cast<std::size_t>(target_dim) > cols) {
    throw std::invalid_argument("fit_pca: target_dim out of range");
  }

  Eigen::MatrixXd centered(rows, cols);
  PcaModel model;
  model.mean.assign(cols, 0.0);
  for (const FeatureVector &row : train) {
    for (std::size_t c = 0; c < cols; ++c) model.mean[c] += row[c];
  }
  for (double &m : model.mean) m /= static_cast<double>(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      centered(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          train[r][c] - model.mean[c];
    }
  }

  const Eigen::MatrixXd covariance =
      centered.transpose() * centered / static_cast<double>(rows - 1);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(covariance);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("fit_pca: eigendecomposition failed");
  }
  // Eigen returns ascending eigenvalues; take from the back.
  const Eigen::VectorXd values = solver.eigenvalues();
  const Eigen::MatrixXd vectors = solver.eigenvectors();
  const double largest = values(values.size() - 1);
  if (!(largest > 0.0)) {
    throw std::invalid_argument("fit_pca: covariance has no usable component");
  }
  for (int k = 0; k < target_dim; ++k) {
    const Eigen::Index idx = values.size() - 1 - k;
    if (values(idx) <= 1e-12 * largest) {
      throw std::invalid_argument(
          "fit_pca: fewer usable components than target_dim");
    }
    Eigen::VectorXd component = vectors.col(idx);
    Eigen::Index peak = 0;
    component.cwiseAbs().maxCoeff(&peak);
    if (component(peak) < 0.0) component = -component;
    model.eigenvalues.push_back(values(idx));
    model.components.emplace_back(component.data(),
                                  component.data() + component.size());
  }
  return model;
}

inline std::vector<FeatureVector> pca_transform(
    const PcaModel &model, const std::vector<FeatureVector> &rows) {
  std::vector<FeatureVector> out;
  out.reserve(rows.size());
  for (const FeatureVector &row : rows) {
    FeatureVector reduced(model.components.size(), 0.0);
    for (std::size_t k = 0; k < model.components.size(); ++k) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        reduced[k] += (row[c] - model.mean[c]) * model.components[k][c];
      }
    }
    out.push_back(std::move(reduced));
  }
  return out;
}

struct PcaSplit {
  std::vector<FeatureVector> train, applied;
  PcaModel model;
};

inline PcaSplit pca_fit_transform(const std::vector<FeatureVector> &train,
                                  int target_dim,
                                  const std::vector<FeatureVector> &apply_to) {
  PcaSplit out;
  out.model = fit_pca(train, target_dim);
  out.train = pca_transform(out.model, train);
  out.applied = pca_transform(out.model, apply_to);
  return out;
}

namespace detail {

/// Round half to even (the default FP rounding mode drives nearbyint).
inline std::int64_t round_half_even(double value) {
  return static_cast<std::int64_t>(std::nearbyint(value));
}

}  // namespace detail

struct SplitIndices {
  std::vector<std::size_t> train, test;
};

/**
 * @brief Seeded stratified split.
 *
 * Each class contributes round-half-even((1 - fraction) * class size) rows
 * to the test split (the remainder stays in train), drawn by a seeded
 * shuffle of the class's row indices. Output index lists are sorted, so the
 * original row order survives within each side.
 */
inline SplitIndices stratified_split_indices(std::span<const int> labels,
                                             int class_count, double fraction,
                                             std::uint64_t seed) {
  if (labels.size() < 5) {
    throw std::invalid_argument("train_test_split: need at least 5 rows");
  }
  if (!(fraction > 0.0 && fraction < 1.0)) {
    throw std::invalid_argument("train_test_split: fraction must be in (0,1)");
  }
  std::vector<std::vector<std::size_t>> by_class(
      static_cast<std::size_t>(class_count));
  for (std::size_t i = 0; i < labels.size(); ++i) {
    by_class[static_cast<std::size_t>(labels[i])].push_back(i);
  }
  Rng rng(seed);
  SplitIndices split;
  for (auto &members : by_class) {
    if (members.size() < 2) {
      throw std::invalid_argument(
          "train_test_split: every class needs at least 2 members");
    }
    rng.shuffle(members);
    const auto test_count = static_cast<std::size_t>(detail::round_half_even(
        (1.0 - fraction) * static_cast<double>(members.size())));
    for (std::size_t i = 0; i < members.size(); ++i) {
      (i < test_count ? split.test : split.train).push_back(members[i]);
    }
  }
  std::sort(split.train.begin(), split.train.end());
  std::sort(split.test.begin(), split.test.end());
  return split;
}

struct DatasetSplit {
  std::vector<FeatureVector> train_features, test_features;
  std::vector<int> train_labels, test_labels;
};

inline DatasetSplit train_test_split(const Dataset &dataset, double fraction,
                                     std::uint64_t seed) {
  const SplitIndices idx = stratified_split_indices(
      dataset.labels, dataset.class_count, fraction, seed);
  DatasetSplit split;
  for (std::size_t i : idx.train) {
    split.train_features.push_back(dataset.features[i]);
    split.train_labels.push_back(dataset.labels[i]);
  }
  for (std::size_t i : idx.test) {
    split.test_features.push_back(dataset.features[i]);
    split.test_labels.push_back(dataset.labels[i]);
  }
  return split;
}

struct PipelineSpec {
  int target_dim = 0;  // PCA dims for Angle; register width for Amplitude
  double split_fraction = 0.8;
  std::uint64_t seed = 0;
};

struct PreparedData {
  LabeledData train, test;
  int num_qubits = 0;
};

/**
 * @brief Full per-family preparation.
 *
 * Angle: scale to [0, pi], PCA to target_dim, then rescale the PCA outputs
 * back into [0, pi] (projections leave the encoding range otherwise).
 * Amplitude: scale to [0, pi], zero-pad to the next power of two, then L2
 * normalize each sample. Splitting happens first with the pipeline seed, so
 * both families see the same row partition.
 */
inline PreparedData prepare(const Dataset &dataset, EncodingFamily family,
                            const PipelineSpec &pipeline) {
  const DatasetSplit split =
      train_test_split(dataset, pipeline.split_fraction, pipeline.seed);
  PreparedData prepared;
  prepared.train.labels = split.train_labels;
  prepared.test.labels = split.test_labels;

  const ScaledSplit scaled =
      minmax_scale(split.train_features, split.test_features);
  switch (family) {
    case EncodingFamily::Angle: {
      if (pipeline.target_dim < 1) {
        throw std::invalid_argument("prepare: Angle family needs target_dim");
      }
      const PcaSplit reduced =
          pca_fit_transform(scaled.train, pipeline.target_dim, scaled.applied);
      const ScaledSplit rescaled = minmax_scale(reduced.train, reduced.applied);
      prepared.train.features = rescaled.train;
      prepared.test.features = rescaled.applied;
      prepared.num_qubits = pipeline.target_dim;
      break;
    }
    case EncodingFamily::Amplitude: {
      // Both families run on the same register, so the amplitude rows pad
      // out to 2^target_dim when a width is requested.
      int qubits = 0;
      while ((std::size_t{1} << qubits) < next_power_of_two(dataset.cols())) {
        ++qubits;
      }
      qubits = std::max(qubits, 1);
      if (pipeline.target_dim > 0) {
        if (pipeline.target_dim < qubits) {
          throw std::invalid_argument(
              "prepare: Amplitude features need " + std::to_string(qubits) +
              " qubits, got target_dim " + std::to_string(pipeline.target_dim));
        }
        qubits = pipeline.target_dim;
      }
      const std::size_t width = std::size_t{1} << qubits;
      prepared.train.features.reserve(scaled.train.size());
      prepared.test.features.reserve(scaled.applied.size());
      for (const auto *rows : {&scaled.train, &scaled.applied}) {
        auto &sink = rows == &scaled.train ? prepared.train.features
                                           : prepared.test.features;
        for (FeatureVector row : *rows) {
          row.resize(width, 0.0);
          sink.push_back(amplitude_normalize(row));
        }
      }
      prepared.num_qubits = qubits;
      break;
    }
    case EncodingFamily::Basis:
      throw std::invalid_argument("prepare: Basis family has no benchmark pipeline");
  }
  return prepared;
}

}  // namespace vqcbench
