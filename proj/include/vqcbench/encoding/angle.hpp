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

#include <stdexcept>
#include <vector>

#include "vqcbench/encoding/strategy.hpp"
#include "vqcbench/sim/state_vector.hpp"

namespace vqcbench {

using FeatureVector = std::vector<double>;

/**
 * @brief Gate sequence embedding one feature per qubit.
 *
 * Qubit i receives the strategy's tags in time order; every rotation tag on
 * qubit i takes angle features[i]. Qubits stay unentangled (tensor product
 * of single-qubit embeddings).
 */
inline std::vector<GateApplication> angle_encoding_gates(
    const EncodingSpec &spec, const FeatureVector &features) {
  if (spec.family != EncodingFamily::Angle) {
    throw std::invalid_argument("angle_encoding_gates: Angle family required");
  }
  std::vector<GateApplication> gates;
  gates.reserve(spec.gate_tags.size() * features.size());
  for (std::size_t q = 0; q < features.size(); ++q) {
    const int qubit = static_cast<int>(q);
    const double x = features[q];
    for (AngleTag tag : spec.gate_tags) {
      switch (tag) {
        case AngleTag::H: gates.push_back({h_gate(), qubit, {}}); break;
        case AngleTag::RX: gates.push_back({rx_gate(x), qubit, {}}); break;
        case AngleTag::RY: gates.push_back({ry_gate(x), qubit, {}}); break;
        case AngleTag::RZ: gates.push_back({rz_gate(x), qubit, {}}); break;
      }
    }
  }
  return gates;
}

/// Applies the strategy to every qubit of `state`; one feature per qubit.
inline StateVector apply_angle_encoding(StateVector state,
                                        const EncodingSpec &spec,
                                        const FeatureVector &features) {
  if (static_cast<int>(features.size()) != state.num_qubits) {
    throw std::invalid_argument(
        "apply_angle_encoding: feature count must equal qubit count");
  }
  const auto gates = angle_encoding_gates(spec, features);
  apply_sequence_in_place(state, gates);
  return state;
}

}  // namespace vqcbench
