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

#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

namespace vqcbench {

/// First and second moment accumulators of the Adam optimizer.
struct AdamState {
  std::vector<double> m, v;

  static AdamState zeros(std::size_t size) {
    AdamState s;
    s.m.assign(size, 0.0);
    s.v.assign(size, 0.0);
    return s;
  }
};

/**
 * @brief One Adam update with bias correction.
 *
 * beta1 = 0.9, beta2 = 0.999, eps = 1e-8;
 * params -= lr * m_hat / (sqrt(v_hat) + eps). `t` is the 1-based step index.
 */
inline void adam_step(std::vector<double> &params,
                      std::span<const double> grads, AdamState &state, int t,
                      double learning_rate, double beta1 = 0.9,
                      double beta2 = 0.999, double eps = 1e-8) {
  if (params.size() != grads.size() || params.size() != state.m.size() ||
      params.size() != state.v.size()) {
    throw std::invalid_argument("adam_step: shape mismatch");
  }
  if (t < 1) throw std::invalid_argument("adam_step: step index must be >= 1");
  const double bias1 = 1.0 - std::pow(beta1, t);
  const double bias2 = 1.0 - std::pow(beta2, t);
  for (std::size_t i = 0; i < params.size(); ++i) {
    state.m[i] = beta1 * state.m[i] + (1.0 - beta1) * grads[i];
    state.v[i] = beta2 * state.v[i] + (1.0 - beta2) * grads[i] * grads[i];
    const double m_hat = state.m[i] / bias1;
    const double v_hat = state.v[i] / bias2;
    params[i] -= learning_rate * m_hat / (std::sqrt(v_hat) + eps);
  }
}

}  // namespace vqcbench
