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
 * @file state_vector.hpp
 * Dense statevector simulation over 2^n complex amplitudes.
 *
 * Index convention: qubit 0 is the MOST significant bit of the basis index,
 * matching circuit diagrams read top to bottom. The basis index of the
 * computational state |q0 q1 ... q_{n-1}> is therefore
 * sum_k q_k * 2^(n-1-k). All marginals and the amplitude-encoding circuits
 * depend on this convention.
 */
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "vqcbench/sim/gates.hpp"

namespace vqcbench {

/// Hard cap on register width; 2^24 amplitudes is the desk-scale limit.
inline constexpr int kMaxQubits = 24;

struct StateVector {
  int num_qubits = 0;
  std::vector<cplx> amplitudes;

  std::size_t size() const { return amplitudes.size(); }
};

/// |00...0> on `num_qubits` wires. Rejects widths outside [1, 24].
inline StateVector new_zero_state(int num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxQubits) {
    throw std::invalid_argument("new_zero_state: num_qubits must be in [1, " +
                                std::to_string(kMaxQubits) + "], got " +
                                std::to_string(num_qubits));
  }
  StateVector state;
  state.num_qubits = num_qubits;
  state.amplitudes.assign(std::size_t{1} << num_qubits, cplx(0, 0));
  state.amplitudes[0] = cplx(1, 0);
  return state;
}

namespace detail {

inline void check_qubit_index(const StateVector &state, int qubit,
                              const char *what) {
  if (qubit < 0 || qubit >= state.num_qubits) {
    throw std::invalid_argument(std::string(what) + ": qubit index " +
                                std::to_string(qubit) + " out of range for " +
                                std::to_string(state.num_qubits) + " qubits");
  }
}

/// Bit position of `qubit` inside a basis index (qubit 0 = MSB).
inline int bit_position(int num_qubits, int qubit) {
  return num_qubits - 1 - qubit;
}

struct ControlMask {
  std::size_t mask = 0;   // bits that must be inspected
  std::size_t value = 0;  // required bit values under `mask`
};

inline ControlMask build_control_mask(const StateVector &state,
                                      std::span<const ControlQubit> controls,
                                      int target) {
  ControlMask cm;
  for (const ControlQubit &c : controls) {
    check_qubit_index(state, c.qubit, "apply_gate control");
    if (c.qubit == target) {
      throw std::invalid_argument("apply_gate: control collides with target");
    }
    const std::size_t bit = std::size_t{1}
                            << bit_position(state.num_qubits, c.qubit);
    if (cm.mask & bit) {
      throw std::invalid_argument("apply_gate: duplicate control qubit");
    }
    cm.mask |= bit;
    if (c.polarity == ControlPolarity::ActiveOnOne) cm.value |= bit;
  }
  return cm;
}

}  // namespace detail

/**
 * @brief Apply a (controlled) gate in place over strided amplitude pairs.
 *
 * The 2x2 core matrix acts on `target`; amplitudes of basis states whose
 * control pattern is unmet are untouched. A GateSpec of kind CNOT is the
 * Pauli X core and requires at least one control wire.
 */
inline void apply_gate_in_place(StateVector &state, const GateSpec &gate,
                                int target,
                                std::span<const ControlQubit> controls = {}) {
  detail::check_qubit_index(state, target, "apply_gate target");
  if (gate.kind == GateKind::CNOT && controls.empty()) {
    throw std::invalid_argument("apply_gate: CNOT requires a control qubit");
  }
  const Mat2 u = gate.kind == GateKind::CNOT ? single_qubit_matrix(x_gate())
                                             : single_qubit_matrix(gate);
  const auto cm = detail::build_control_mask(state, controls, target);

  const std::size_t stride = std::size_t{1}
                             << detail::bit_position(state.num_qubits, target);
  const std::size_t half = state.size() >> 1;
  auto &amp = state.amplitudes;
  for (std::size_t i = 0; i < half; ++i) {
    // Insert a 0 at the target bit to enumerate pair bases.
    const std::size_t low = i & (stride - 1);
    const std::size_t base = ((i ^ low) << 1) | low;
    if ((base & cm.mask) != cm.value) continue;
    const cplx a0 = amp[base];
    const cplx a1 = amp[base | stride];
    amp[base] = u[0] * a0 + u[1] * a1;
    amp[base | stride] = u[2] * a0 + u[3] * a1;
  }
}

/// Value-semantics wrapper: returns the transformed state.
inline StateVector apply_gate(StateVector state, const GateSpec &gate,
                              int target,
                              std::span<const ControlQubit> controls = {}) {
  apply_gate_in_place(state, gate, target, controls);
  return state;
}

inline void apply_sequence_in_place(StateVector &state,
                                    std::span<const GateApplication> gates) {
  for (const GateApplication &g : gates) {
    apply_gate_in_place(state, g.gate, g.target, g.controls);
  }
}

inline StateVector apply_sequence(StateVector state,
                                  std::span<const GateApplication> gates) {
  apply_sequence_in_place(state, gates);
  return state;
}

/// |c_i|^2 for every basis state.
inline std::vector<double> state_probabilities(const StateVector &state) {
  std::vector<double> probs(state.size());
  for (std::size_t i = 0; i < state.size(); ++i) {
    probs[i] = std::norm(state.amplitudes[i]);
  }
  return probs;
}

/// Marginal probability of measuring |1> on one qubit.
inline double qubit_one_probability(const StateVector &state, int qubit) {
  detail::check_qubit_index(state, qubit, "qubit_one_probability");
  const std::size_t bit = std::size_t{1}
                          << detail::bit_position(state.num_qubits, qubit);
  double p = 0.0;
  for (std::size_t i = 0; i < state.size(); ++i) {
    if (i & bit) p += std::norm(state.amplitudes[i]);
  }
  return p;
}

/**
 * @brief Bloch coordinates (x, y, z) of a single-qubit pure state:
 * x = 2 Re(c0* c1), y = 2 Im(c0* c1), z = |c0|^2 - |c1|^2.
 */
inline std::array<double, 3> bloch_vector(const StateVector &state) {
  if (state.num_qubits != 1) {
    throw std::invalid_argument("bloch_vector: state must be single-qubit");
  }
  const cplx cross = std::conj(state.amplitudes[0]) * state.amplitudes[1];
  return {2.0 * cross.real(), 2.0 * cross.imag(),
          std::norm(state.amplitudes[0]) - std::norm(state.amplitudes[1])};
}

/// <a|b>. Sizes must match.
inline cplx inner_product(const StateVector &a, const StateVector &b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("inner_product: dimension mismatch");
  }
  cplx acc(0, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    acc += std::conj(a.amplitudes[i]) * b.amplitudes[i];
  }
  return acc;
}

/// |<a|b>|^2 — the equality measure that ignores global phase.
inline double fidelity(const StateVector &a, const StateVector &b) {
  return std::norm(inner_product(a, b));
}

inline double state_norm(const StateVector &state) {
  double acc = 0.0;
  for (const cplx &c : state.amplitudes) acc += std::norm(c);
  return std::sqrt(acc);
}

}  // namespace vqcbench
