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

#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>

#include "oracles.hpp"
#include "vqcbench/data/dataset.hpp"
#include "vqcbench/data/pipeline.hpp"

using namespace vqcbench;
using Catch::Approx;

namespace {
constexpr double pi = std::numbers::pi;

std::filesystem::path data_dir() { return VQCBENCH_DATA_DIR; }

/// Writes a throwaway CSV and returns its path.
std::filesystem::path temp_csv(const std::string &name,
                               const std::string &content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path, std::ios::trunc);
  out << content;
  return path;
}
}  // namespace

TEST_CASE("load_csv_dataset on the shipped files", "[data]") {
  SECTION("wine") {
    const Dataset wine =
        load_csv_dataset((data_dir() / "wine.csv").string(), "class");
    REQUIRE(wine.rows() == 178);
    REQUIRE(wine.cols() == 13);
    REQUIRE(wine.class_count == 3);
    std::vector<int> counts(3, 0);
    for (int label : wine.labels) ++counts[static_cast<std::size_t>(label)];
    REQUIRE(counts == std::vector<int>{59, 71, 48});
  }
  SECTION("diabetes") {
    const Dataset diabetes =
        load_csv_dataset((data_dir() / "diabetes.csv").string(), "Outcome");
    REQUIRE(diabetes.rows() == 168);
    REQUIRE(diabetes.cols() == 8);
    REQUIRE(diabetes.class_count == 2);
    int positives = 0;
    for (int label : diabetes.labels) positives += label;
    const double positive_share =
        static_cast<double>(positives) / static_cast<double>(diabetes.rows());
    REQUIRE(positive_share == Approx(0.35).margin(0.02));
  }
}

TEST_CASE("load_csv_dataset error reporting", "[data]") {
  REQUIRE_THROWS_AS(load_csv_dataset("/nonexistent/file.csv", "class"),
                    DataError);
  REQUIRE_THROWS_AS(
      load_csv_dataset(temp_csv("vqcb_empty.csv", "").string(), "class"),
      DataError);
  REQUIRE_THROWS_WITH(
      load_csv_dataset(
          temp_csv("vqcb_bad.csv", "a,b,class\n1,zzz,0\n").string(), "class"),
      Catch::Matchers::ContainsSubstring("row 1") &&
          Catch::Matchers::ContainsSubstring("'b'"));
  REQUIRE_THROWS_WITH(
      load_csv_dataset(
          temp_csv("vqcb_ragged.csv", "a,b,class\n1,2,0\n1,2\n").string(),
          "class"),
      Catch::Matchers::ContainsSubstring("ragged row 2"));
  REQUIRE_THROWS_WITH(
      load_csv_dataset(temp_csv("vqcb_nolabel.csv", "a,b\n1,2\n").string(),
                       "class"),
      Catch::Matchers::ContainsSubstring("label column"));
}

TEST_CASE("minmax scaling", "[data]") {
  SECTION("column [0, 5, 10] maps onto [0, pi/2, pi]") {
    const std::vector<FeatureVector> train = {{0.0}, {5.0}, {10.0}};
    const ScaledSplit scaled = minmax_scale(train, train);
    REQUIRE(scaled.train[0][0] == Approx(0.0));
    REQUIRE(scaled.train[1][0] == Approx(pi / 2));
    REQUIRE(scaled.train[2][0] == Approx(pi));
  }
  SECTION("test values clamp into [0, pi]") {
    const std::vector<FeatureVector> train = {{0.0}, {10.0}};
    const ScaledSplit scaled = minmax_scale(train, {{-5.0}, {15.0}});
    REQUIRE(scaled.applied[0][0] == 0.0);
    REQUIRE(scaled.applied[1][0] == Approx(pi));
  }
  SECTION("constant features map to pi/2") {
    const std::vector<FeatureVector> train = {{3.0}, {3.0}};
    const ScaledSplit scaled = minmax_scale(train, {{7.0}});
    REQUIRE(scaled.train[0][0] == Approx(pi / 2));
    REQUIRE(scaled.applied[0][0] == Approx(pi / 2));
  }
}

TEST_CASE("pca", "[data]") {
  SECTION("data in an exact 2-D subspace reconstructs to 1e-9") {
    Rng rng(17);
    // Rows are combinations of two fixed directions in R^5.
    const FeatureVector u = {1.0, 0.5, -0.25, 0.0, 2.0};
    const FeatureVector v = {0.0, 1.0, 1.0, -1.0, 0.5};
    std::vector<FeatureVector> rows;
    for (int i = 0; i < 40; ++i) {
      const double a = rng.uniform(-2, 2), b = rng.uniform(-2, 2);
      FeatureVector row(5);
      for (int c = 0; c < 5; ++c) row[c] = a * u[c] + b * v[c];
      rows.push_back(std::move(row));
    }
    const PcaSplit reduced = pca_fit_transform(rows, 2, rows);
    // Reconstruct from the two components and compare.
    for (std::size_t r = 0; r < rows.size(); ++r) {
      FeatureVector rebuilt = reduced.model.mean;
      for (int k = 0; k < 2; ++k) {
        for (int c = 0; c < 5; ++c) {
          rebuilt[c] += reduced.train[r][k] * reduced.model.components[k][c];
        }
      }
      for (int c = 0; c < 5; ++c) {
        REQUIRE(rebuilt[c] == Approx(rows[r][c]).margin(1e-9));
      }
    }
  }
  SECTION("components are orthonormal, eigenvalues descend, peak positive") {
    const Dataset wine =
        load_csv_dataset((data_dir() / "wine.csv").string(), "class");
    const PcaModel model = fit_pca(wine.features, 4);
    REQUIRE(model.components.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        double dot = 0.0;
        for (std::size_t c = 0; c < 13; ++c) {
          dot += model.components[i][c] * model.components[j][c];
        }
        REQUIRE(dot == Approx(i == j ? 1.0 : 0.0).margin(1e-10));
      }
      if (i > 0) REQUIRE(model.eigenvalues[i] <= model.eigenvalues[i - 1]);
      double peak = 0.0;
      for (double c : model.components[i]) {
        if (std::abs(c) > std::abs(peak)) peak = c;
      }
      REQUIRE(peak > 0.0);
    }
  }
  SECTION("eigenvalue equation holds on the wine covariance") {
    const Dataset wine =
        load_csv_dataset((data_dir() / "wine.csv").string(), "class");
    const PcaModel model = fit_pca(wine.features, 2);
    // C v = lambda v for the top component, C built independently here.
    const std::size_t n = wine.rows(), d = wine.cols();
    std::vector<double> mean(d, 0.0);
    for (const auto &row : wine.features)
      for (std::size_t c = 0; c < d; ++c) mean[c] += row[c] / double(n);
    std::vector<std::vector<double>> cov(d, std::vector<double>(d, 0.0));
    for (const auto &row : wine.features) {
      for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) {
          cov[a][b] += (row[a] - mean[a]) * (row[b] - mean[b]) / double(n - 1);
        }
      }
    }
    for (std::size_t a = 0; a < d; ++a) {
      double cv = 0.0;
      for (std::size_t b = 0; b < d; ++b) {
        cv += cov[a][b] * model.components[0][b];
      }
      REQUIRE(cv == Approx(model.eigenvalues[0] * model.components[0][a])
                        .margin(1e-6 * model.eigenvalues[0]));
    }
  }
  SECTION("degenerate covariance is rejected past the usable rank") {
    const std::vector<FeatureVector> rank1 = {{1, 2}, {2, 4}, {3, 6}};
    REQUIRE_THROWS_AS(fit_pca(rank1, 2), std::invalid_argument);
    REQUIRE_NOTHROW(fit_pca(rank1, 1));
  }
  SECTION("fit ignores the apply_to rows") {
    const Dataset wine =
        load_csv_dataset((data_dir() / "wine.csv").string(), "class");
    std::vector<FeatureVector> train(wine.features.begin(),
                                     wine.features.begin() + 100);
    std::vector<FeatureVector> rest(wine.features.begin() + 100,
                                    wine.features.end());
    std::vector<FeatureVector> permuted(rest.rbegin(), rest.rend());
    const PcaSplit a = pca_fit_transform(train, 3, rest);
    const PcaSplit b = pca_fit_transform(train, 3, permuted);
    REQUIRE(a.model.components == b.model.components);
    REQUIRE(a.model.mean == b.model.mean);
  }
}

TEST_CASE("stratified split", "[data]") {
  const Dataset wine =
      load_csv_dataset((data_dir() / "wine.csv").string(), "class");
  SECTION("wine splits 142/36") {
    const DatasetSplit split = train_test_split(wine, 0.8, 9001);
    REQUIRE(split.train_features.size() == 142);
    REQUIRE(split.test_features.size() == 36);
  }
  SECTION("same seed, same split; different seed, different split") {
    const DatasetSplit a = train_test_split(wine, 0.8, 5);
    const DatasetSplit b = train_test_split(wine, 0.8, 5);
    const DatasetSplit c = train_test_split(wine, 0.8, 6);
    REQUIRE(a.train_features == b.train_features);
    REQUIRE(a.test_labels == b.test_labels);
    REQUIRE(a.train_features != c.train_features);
  }
  SECTION("per-class test share lands within one sample of 20%") {
    const DatasetSplit split = train_test_split(wine, 0.8, 33);
    std::vector<int> class_total(3, 0), class_test(3, 0);
    for (int label : wine.labels) ++class_total[label];
    for (int label : split.test_labels) ++class_test[label];
    for (int c = 0; c < 3; ++c) {
      REQUIRE(std::abs(class_test[c] - 0.2 * class_total[c]) <= 1.0);
    }
  }
  SECTION("split is a partition") {
    const SplitIndices idx =
        stratified_split_indices(wine.labels, 3, 0.8, 12);
    std::vector<std::size_t> all = idx.train;
    all.insert(all.end(), idx.test.begin(), idx.test.end());
    std::sort(all.begin(), all.end());
    REQUIRE(all.size() == wine.rows());
    for (std::size_t i = 0; i < all.size(); ++i) REQUIRE(all[i] == i);
  }
  SECTION("tiny classes are rejected") {
    Dataset tiny;
    tiny.class_count = 2;
    tiny.labels = {0, 0, 0, 0, 1};
    tiny.features.assign(5, FeatureVector{1.0});
    REQUIRE_THROWS_AS(train_test_split(tiny, 0.8, 1), std::invalid_argument);
  }
}

TEST_CASE("prepare pipelines", "[data]") {
  const Dataset wine =
      load_csv_dataset((data_dir() / "wine.csv").string(), "class");
  PipelineSpec pipeline;
  pipeline.target_dim = 4;
  pipeline.seed = 404;

  SECTION("angle: four features per sample, all inside [0, pi]") {
    const PreparedData prepared =
        prepare(wine, EncodingFamily::Angle, pipeline);
    REQUIRE(prepared.num_qubits == 4);
    REQUIRE(prepared.train.size() == 142);
    REQUIRE(prepared.test.size() == 36);
    for (const auto &set : {prepared.train, prepared.test}) {
      for (const FeatureVector &row : set.features) {
        REQUIRE(row.size() == 4);
        for (double v : row) {
          REQUIRE(v >= 0.0);
          REQUIRE(v <= pi);
        }
      }
    }
  }
  SECTION("amplitude: 16 unit-norm amplitudes per wine sample") {
    const PreparedData prepared =
        prepare(wine, EncodingFamily::Amplitude, pipeline);
    REQUIRE(prepared.num_qubits == 4);
    for (const FeatureVector &row : prepared.train.features) {
      REQUIRE(row.size() == 16);
      double norm_sq = 0.0;
      for (double v : row) norm_sq += v * v;
      REQUIRE(norm_sq == Approx(1.0).margin(1e-12));
    }
  }
  SECTION("amplitude on diabetes: 8 amplitudes on 3 qubits") {
    const Dataset diabetes =
        load_csv_dataset((data_dir() / "diabetes.csv").string(), "Outcome");
    PipelineSpec spec;
    spec.target_dim = 3;
    spec.seed = 1;
    const PreparedData prepared =
        prepare(diabetes, EncodingFamily::Amplitude, spec);
    REQUIRE(prepared.num_qubits == 3);
    REQUIRE(prepared.train.features[0].size() == 8);
  }
  SECTION("both families share the same split rows") {
    const PreparedData angle = prepare(wine, EncodingFamily::Angle, pipeline);
    const PreparedData amp =
        prepare(wine, EncodingFamily::Amplitude, pipeline);
    REQUIRE(angle.train.labels == amp.train.labels);
    REQUIRE(angle.test.labels == amp.test.labels);
  }
}
