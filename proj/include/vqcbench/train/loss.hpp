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
 * @file loss.hpp
 * Cross-entropy loss over the qubit-probability readout, as a function of
 * the raw readout vector z (see measurement.hpp). Probabilities are clamped
 * to [1e-12, 1 - 1e-12] before any logarithm.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

#include "vqcbench/train/measurement.hpp"

namespace vqcbench {

/// Identifies the scalar training loss of one sample.
struct LossSpec {
  int num_classes = 2;
  int target = 0;
};

inline constexpr double kProbClamp = 1e-12;

inline double clamp_probability(double p) {
  return std::clamp(p, kProbClamp, 1.0 - kProbClamp);
}

namespace detail {

inline void check_loss_spec(const LossSpec &spec, std::size_t readout_size) {
  if (spec.target < 0 || spec.target >= spec.num_classes) {
    throw std::invalid_argument("loss: target label out of range");
  }
  const std::size_t expected =
      spec.num_classes == 2 ? 1 : static_cast<std::size_t>(spec.num_classes);
  if (readout_size != expected) {
    throw std::invalid_argument("loss: readout size does not match classes");
  }
}

}  // namespace detail

/**
 * @brief Cross-entropy of one sample given the raw readout z.
 *
 * Binary: -[y ln p + (1-y) ln(1-p)] on p = z[0]. Multi-class: -ln sigma(z)_y
 * with sigma the softmax over the per-qubit probabilities.
 */
inline double cross_entropy_loss(std::span<const double> readout,
                                 const LossSpec &spec) {
  detail::check_loss_spec(spec, readout.size());
  if (spec.num_classes == 2) {
    const double p = clamp_probability(readout[0]);
    return spec.target == 1 ? -std::log(p) : -std::log(1.0 - p);
  }
  const std::vector<double> sigma = softmax(readout);
  return -std::log(
      clamp_probability(sigma[static_cast<std::size_t>(spec.target)]));
}

/// Convenience overload on the prediction structure.
inline double cross_entropy_loss(const ClassProbabilities &probabilities,
                                 int target, int num_classes) {
  return cross_entropy_loss(
      std::span<const double>(probabilities.raw),
      LossSpec{num_classes, target});
}

/**
 * @brief dLoss/dz — the per-readout-probability sensitivities that seed the
 * adjoint sweep and chain the parameter-shift rule through the classical
 * post-processing.
 */
inline std::vector<double> cross_entropy_weights(std::span<const double> readout,
                                                 const LossSpec &spec) {
  detail::check_loss_spec(spec, readout.size());
  if (spec.num_classes == 2) {
    const double p = clamp_probability(readout[0]);
    const double y = spec.target == 1 ? 1.0 : 0.0;
    return {(p - y) / (p * (1.0 - p))};
  }
  std::vector<double> weights = softmax(readout);
  weights[static_cast<std::size_t>(spec.target)] -= 1.0;
  return weights;
}

}  // namespace vqcbench
