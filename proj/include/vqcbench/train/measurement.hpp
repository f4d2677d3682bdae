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
 * @file measurement.hpp
 * Readout of class probabilities from a statevector and the prediction rule.
 *
 * Binary: the |1> probability of qubit 0 against a 0.5 threshold.
 * Multi-class (M classes): the |1> probabilities of qubits 0..M-1, softmax
 * normalized, argmax with lowest-index tie-break.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

#include "vqcbench/sim/state_vector.hpp"

namespace vqcbench {

/// sigma(z)_i = exp(z_i) / sum_j exp(z_j), computed max-shifted.
inline std::vector<double> softmax(std::span<const double> raw) {
  if (raw.empty()) throw std::invalid_argument("softmax: empty input");
  const double shift = *std::max_element(raw.begin(), raw.end());
  std::vector<double> out(raw.size());
  double total = 0.0;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    out[i] = std::exp(raw[i] - shift);
    total += out[i];
  }
  for (double &v : out) v /= total;
  return out;
}

struct ClassProbabilities {
  std::vector<double> raw;         // per-qubit |1> probabilities
  std::vector<double> normalized;  // softmax (multi-class) or P1 (binary)
};

/// Per-qubit |1> probabilities feeding the loss: one value for binary
/// readout, M values for M classes.
inline std::vector<double> readout_probabilities(const StateVector &state,
                                                 int num_classes) {
  if (num_classes < 2) {
    throw std::invalid_argument("readout: num_classes must be >= 2");
  }
  const int readout_qubits = num_classes == 2 ? 1 : num_classes;
  if (readout_qubits > state.num_qubits) {
    throw std::invalid_argument("readout: more classes than qubits");
  }
  std::vector<double> probs(static_cast<std::size_t>(readout_qubits));
  for (int q = 0; q < readout_qubits; ++q) {
    probs[static_cast<std::size_t>(q)] = qubit_one_probability(state, q);
  }
  return probs;
}

/// Class label from a raw readout vector. Argmax commutes with softmax, so
/// this matches predict() without normalizing; ties go to the lowest index.
inline int label_from_readout(std::span<const double> readout,
                              int num_classes) {
  if (num_classes == 2) return readout[0] > 0.5 ? 1 : 0;
  return static_cast<int>(std::max_element(readout.begin(), readout.end()) -
                          readout.begin());
}

struct Prediction {
  int label = 0;
  ClassProbabilities probabilities;
};

inline Prediction predict(const StateVector &state, int num_classes) {
  Prediction pred;
  pred.probabilities.raw = readout_probabilities(state, num_classes);
  if (num_classes == 2) {
    pred.probabilities.normalized = pred.probabilities.raw;
    pred.label = pred.probabilities.raw[0] > 0.5 ? 1 : 0;
    return pred;
  }
  pred.probabilities.normalized = softmax(pred.probabilities.raw);
  const auto &p = pred.probabilities.normalized;
  pred.label = static_cast<int>(std::max_element(p.begin(), p.end()) -
                                p.begin());  // first max wins ties
  return pred;
}

}  // namespace vqcbench
