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
 * @file strongly_entangling.hpp
 * Strongly entangling layers: per layer a Rot(phi, theta, gamma) on every
 * qubit followed by a CNOT ring whose control-to-target range grows with
 * the layer index.
 */
#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "vqcbench/sim/circuit.hpp"
#include "vqcbench/sim/state_vector.hpp"

namespace vqcbench {

/// Trainable angles, shape [layers][qubits][3] flattened layer-major.
struct AnsatzParams {
  int layers = 0;
  int num_qubits = 0;
  std::vector<double> values;

  static AnsatzParams zeros(int layers, int num_qubits) {
    AnsatzParams p;
    p.layers = layers;
    p.num_qubits = num_qubits;
    p.values.assign(static_cast<std::size_t>(layers) * num_qubits * 3, 0.0);
    return p;
  }

  double &at(int layer, int qubit, int angle) {
    return values[(static_cast<std::size_t>(layer) * num_qubits + qubit) * 3 +
                  angle];
  }
  double at(int layer, int qubit, int angle) const {
    return values[(static_cast<std::size_t>(layer) * num_qubits + qubit) * 3 +
                  angle];
  }
};

/// CNOT ring range of layer `layer` (0-based): (layer mod (n-1)) + 1.
inline int entangler_range(int layer, int num_qubits) {
  if (num_qubits < 2) return 0;
  return (layer % (num_qubits - 1)) + 1;
}

/// Control -> target pairs of one layer's CNOT ring.
inline std::vector<std::pair<int, int>> entangler_pairs(int layer,
                                                        int num_qubits) {
  std::vector<std::pair<int, int>> pairs;
  const int range = entangler_range(layer, num_qubits);
  if (range == 0) return pairs;
  pairs.reserve(static_cast<std::size_t>(num_qubits));
  for (int q = 0; q < num_qubits; ++q) {
    pairs.emplace_back(q, (q + range) % num_qubits);
  }
  return pairs;
}

/**
 * @brief Appends one ansatz layer to a circuit.
 *
 * Each qubit gets the Rot decomposition RZ(phi), RY(theta), RZ(gamma) as
 * three trainable slots starting at `param_base` in (phi, theta, gamma)
 * order, qubit-major within the layer; then the CNOT ring.
 */
inline void append_entangling_layer(Circuit &circuit, int layer,
                                    int param_base) {
  const int n = circuit.num_qubits;
  for (int q = 0; q < n; ++q) {
    const int base = param_base + q * 3;
    append_trainable(circuit, GateKind::RZ, q, base);
    append_trainable(circuit, GateKind::RY, q, base + 1);
    append_trainable(circuit, GateKind::RZ, q, base + 2);
  }
  for (const auto &[control, target] : entangler_pairs(layer, n)) {
    circuit.gates.push_back(
        {cnot_gate(), target, {control_on_one(control)}, -1});
  }
}

/// Applies all layers of `params` to `state`.
inline StateVector strongly_entangling_layers(StateVector state,
                                              const AnsatzParams &params) {
  if (params.num_qubits != state.num_qubits) {
    throw std::invalid_argument(
        "strongly_entangling_layers: qubit dimension mismatch");
  }
  Circuit circuit;
  circuit.num_qubits = state.num_qubits;
  circuit.num_params = static_cast<int>(params.values.size());
  for (int l = 0; l < params.layers; ++l) {
    append_entangling_layer(circuit, l, l * state.num_qubits * 3);
  }
  run_circuit_in_place(state, circuit, params.values);
  return state;
}

}  // namespace vqcbench
