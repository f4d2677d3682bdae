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
 * @file circuit.hpp
 * Flat gate list with trainable-parameter slots. Fixed gates (encodings)
 * carry their angles inline; trainable gates read their single angle from
 * the external parameter vector via `param_index`.
 */
#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "vqcbench/sim/gates.hpp"
#include "vqcbench/sim/state_vector.hpp"

namespace vqcbench {

struct CircuitGate {
  GateSpec gate;
  int target = 0;
  std::vector<ControlQubit> controls;
  /// Index into the flat parameter vector, or -1 for a fixed gate.
  /// Trainable gates must be uncontrolled single-angle rotations.
  int param_index = -1;
};

struct Circuit {
  int num_qubits = 0;
  int num_params = 0;
  std::vector<CircuitGate> gates;
};

inline GateSpec resolved_gate(const CircuitGate &cg,
                              std::span<const double> params) {
  if (cg.param_index < 0) return cg.gate;
  GateSpec g = cg.gate;
  g.angles[0] = params[static_cast<std::size_t>(cg.param_index)];
  return g;
}

inline void run_circuit_in_place(StateVector &state, const Circuit &circuit,
                                 std::span<const double> params) {
  if (static_cast<int>(params.size()) != circuit.num_params) {
    throw std::invalid_argument("run_circuit: parameter count mismatch");
  }
  for (const CircuitGate &cg : circuit.gates) {
    apply_gate_in_place(state, resolved_gate(cg, params), cg.target,
                        cg.controls);
  }
}

/// Executes the circuit on |0...0>.
inline StateVector run_circuit(const Circuit &circuit,
                               std::span<const double> params) {
  StateVector state = new_zero_state(circuit.num_qubits);
  run_circuit_in_place(state, circuit, params);
  return state;
}

inline void append_fixed(Circuit &circuit, const GateApplication &g) {
  circuit.gates.push_back({g.gate, g.target, g.controls, -1});
}

/// Appends a trainable single-angle rotation bound to parameter slot `index`.
inline void append_trainable(Circuit &circuit, GateKind kind, int target,
                             int index) {
  if (gate_angle_count(kind) != 1) {
    throw std::invalid_argument(
        "append_trainable: trainable gates must take exactly one angle");
  }
  circuit.gates.push_back({GateSpec{kind, {}}, target, {}, index});
}

}  // namespace vqcbench
