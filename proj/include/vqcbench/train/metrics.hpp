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
 * @file metrics.hpp
 * Confusion-matrix bookkeeping and the six evaluation metrics. For more than
 * two classes every metric except plain accuracy is macro-averaged over
 * one-vs-rest confusion matrices. Ratios with a zero denominator are
 * reported as 0 and raise the `degenerate` flag instead of erroring, since
 * all-one-class predictions are routine early in training.
 */
#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace vqcbench {

struct ConfusionMatrix {
  std::int64_t tp = 0, tn = 0, fp = 0, fn = 0;

  std::int64_t total() const { return tp + tn + fp + fn; }
};

struct Metrics {
  double accuracy = 0.0;
  double balanced_accuracy = 0.0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  double specificity = 0.0;
  bool degenerate = false;  // some ratio had a zero denominator
};

inline const std::vector<std::string> &metric_names() {
  static const std::vector<std::string> names = {
      "accuracy", "balanced_accuracy", "precision",
      "recall",   "f1",                "specificity"};
  return names;
}

inline double metric_by_name(const Metrics &m, const std::string &name) {
  if (name == "accuracy") return m.accuracy;
  if (name == "balanced_accuracy") return m.balanced_accuracy;
  if (name == "precision") return m.precision;
  if (name == "recall") return m.recall;
  if (name == "f1") return m.f1;
  if (name == "specificity") return m.specificity;
  throw std::invalid_argument("unknown metric: " + name);
}

/// One-vs-rest confusion matrices, one per class.
inline std::vector<ConfusionMatrix> tally_confusion(
    std::span<const int> predictions, std::span<const int> labels,
    int num_classes) {
  if (predictions.size() != labels.size() || predictions.empty()) {
    throw std::invalid_argument("tally_confusion: empty or mismatched input");
  }
  std::vector<ConfusionMatrix> per_class(
      static_cast<std::size_t>(num_classes));
  for (std::size_t i = 0; i < predictions.size(); ++i) {
    for (int c = 0; c < num_classes; ++c) {
      auto &cm = per_class[static_cast<std::size_t>(c)];
      const bool truth = labels[i] == c;
      const bool predicted = predictions[i] == c;
      if (truth && predicted) ++cm.tp;
      else if (!truth && !predicted) ++cm.tn;
      else if (!truth && predicted) ++cm.fp;
      else ++cm.fn;
    }
  }
  return per_class;
}

namespace detail {

inline double safe_ratio(double numerator, double denominator,
                         bool &degenerate) {
  if (denominator == 0.0) {
    degenerate = true;
    return 0.0;
  }
  return numerator / denominator;
}

}  // namespace detail

/**
 * @brief Metrics from per-class confusion matrices.
 *
 * One matrix means binary classification with class 1 as positive; its
 * counts are used directly. With k matrices accuracy is the plain fraction
 * correct (sum of TP over total) and the rest are unweighted means of the
 * per-class one-vs-rest values.
 */
inline Metrics metrics_from_confusion(
    std::span<const ConfusionMatrix> per_class) {
  if (per_class.empty()) {
    throw std::invalid_argument("metrics_from_confusion: no classes");
  }
  Metrics out;
  if (per_class.size() == 1) {
    const ConfusionMatrix &cm = per_class[0];
    const auto tp = static_cast<double>(cm.tp);
    const auto tn = static_cast<double>(cm.tn);
    const auto fp = static_cast<double>(cm.fp);
    const auto fn = static_cast<double>(cm.fn);
    out.accuracy = detail::safe_ratio(tp + tn, tp + tn + fp + fn, out.degenerate);
    out.precision = detail::safe_ratio(tp, tp + fp, out.degenerate);
    out.recall = detail::safe_ratio(tp, tp + fn, out.degenerate);
    out.specificity = detail::safe_ratio(tn, tn + fp, out.degenerate);
    out.f1 = detail::safe_ratio(2.0 * out.precision * out.recall,
                                out.precision + out.recall, out.degenerate);
    out.balanced_accuracy = (out.recall + out.specificity) / 2.0;
    return out;
  }

  double correct = 0.0, total = 0.0;
  for (const ConfusionMatrix &cm : per_class) correct += static_cast<double>(cm.tp);
  total = static_cast<double>(per_class[0].total());
  out.accuracy = detail::safe_ratio(correct, total, out.degenerate);

  for (const ConfusionMatrix &cm : per_class) {
    const auto tp = static_cast<double>(cm.tp);
    const auto tn = static_cast<double>(cm.tn);
    const auto fp = static_cast<double>(cm.fp);
    const auto fn = static_cast<double>(cm.fn);
    const double precision = detail::safe_ratio(tp, tp + fp, out.degenerate);
    const double recall = detail::safe_ratio(tp, tp + fn, out.degenerate);
    const double specificity = detail::safe_ratio(tn, tn + fp, out.degenerate);
    const double f1 = detail::safe_ratio(2.0 * precision * recall,
                                         precision + recall, out.degenerate);
    out.precision += precision;
    out.recall += recall;
    out.specificity += specificity;
    out.f1 += f1;
    out.balanced_accuracy += (recall + specificity) / 2.0;
  }
  const double k = static_cast<double>(per_class.size());
  out.precision /= k;
  out.recall /= k;
  out.specificity /= k;
  out.f1 /= k;
  out.balanced_accuracy /= k;
  return out;
}

/// Binary helper: predictions and labels in {0, 1}, class 1 positive.
inline Metrics binary_metrics(std::span<const int> predictions,
                              std::span<const int> labels) {
  const auto per_class = tally_confusion(predictions, labels, 2);
  const ConfusionMatrix positive = per_class[1];
  return metrics_from_confusion(std::span<const ConfusionMatrix>(&positive, 1));
}

inline Metrics classification_metrics(std::span<const int> predictions,
                                      std::span<const int> labels,
                                      int num_classes) {
  if (num_classes == 2) return binary_metrics(predictions, labels);
  const auto per_class = tally_confusion(predictions, labels, num_classes);
  return metrics_from_confusion(per_class);
}

}  // namespace vqcbench
