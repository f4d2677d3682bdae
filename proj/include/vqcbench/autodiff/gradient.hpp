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
 * @file gradient.hpp
 * Gradients of a scalar loss with respect to circuit parameters.
 *
 * Three routes with one contract:
 *  - adjoint_gradient: reverse statevector sweep, exact, O(gates) extra work;
 *  - parameter_shift_gradient: the +-pi/2 shift rule per rotation, applied to
 *    the measured qubit probabilities and chained through the classical loss;
 *  - finite_difference_gradient: central differences, the test oracle.
 *
 * The loss is any function of the readout probabilities z with sensitivities
 * dLoss/dz available (cross-entropy here; see train/loss.hpp). All rotation
 * gates have generator P/2 with Pauli P, so dU/dtheta = U(theta + pi) / 2 —
 * both exact routes lean on that identity.
 */
#pragma once

#include <cmath>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

#include "vqcbench/ansatz/model.hpp"
#include "vqcbench/sim/circuit.hpp"
#include "vqcbench/sim/state_vector.hpp"
#include "vqcbench/train/loss.hpp"

namespace vqcbench {

struct LossGradient {
  double value = 0.0;
  std::vector<double> grad;  // layer-major, then qubit, then (phi,theta,gamma)
  std::vector<double> readout;  // qubit probabilities the loss was taken on
};

namespace detail {

/// lambda = O_eff |psi> for O_eff = sum_i w_i P1(q_i), a diagonal operator.
inline StateVector apply_readout_observable(const StateVector &psi,
                                            std::span<const double> weights) {
  StateVector lambda = psi;
  const int n = psi.num_qubits;
  for (std::size_t b = 0; b < psi.size(); ++b) {
    double factor = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      if (b >> (n - 1 - static_cast<int>(i)) & 1) factor += weights[i];
    }
    lambda.amplitudes[b] *= factor;
  }
  return lambda;
}

inline void check_trainable_gate(const CircuitGate &cg) {
  if (!cg.controls.empty()) {
    throw std::invalid_argument(
        "gradient: trainable gates must be uncontrolled");
  }
  if (gate_angle_count(cg.gate.kind) != 1) {
    throw std::invalid_argument(
        "gradient: trainable gates must be single-angle rotations");
  }
}

}  // namespace detail

/**
 * @brief Exact gradient via the adjoint reverse sweep.
 *
 * Forward once, seed the cotangent with the loss-weighted readout
 * observable, then walk the gate list backwards undoing each gate and
 * accumulating Re<mu| U(theta+pi) |a_{k-1}> into the owning parameter slot.
 */
inline LossGradient adjoint_gradient(const Circuit &circuit,
                                     std::span<const double> params,
                                     const LossSpec &loss) {
  LossGradient result;
  result.grad.assign(static_cast<std::size_t>(circuit.num_params), 0.0);

  StateVector psi = run_circuit(circuit, params);
  result.readout = readout_probabilities(psi, loss.num_classes);
  result.value = cross_entropy_loss(result.readout, loss);
  if (circuit.num_params == 0) return result;
  const std::vector<double> weights =
      cross_entropy_weights(result.readout, loss);

  StateVector mu = detail::apply_readout_observable(psi, weights);
  StateVector phi = std::move(psi);
  for (auto it = circuit.gates.rbegin(); it != circuit.gates.rend(); ++it) {
    const GateSpec gate = resolved_gate(*it, params);
    apply_gate_in_place(phi, inverse_gate(gate), it->target, it->controls);
    if (it->param_index >= 0) {
      detail::check_trainable_gate(*it);
      GateSpec shifted = gate;
      shifted.angles[0] += std::numbers::pi;
      StateVector derivative = phi;
      apply_gate_in_place(derivative, shifted, it->target);
      result.grad[static_cast<std::size_t>(it->param_index)] +=
          inner_product(mu, derivative).real();
    }
    apply_gate_in_place(mu, inverse_gate(gate), it->target, it->controls);
  }
  return result;
}

/**
 * @brief Shift-rule gradient: dz/dtheta = [z(theta+pi/2) - z(theta-pi/2)] / 2
 * per rotation occurrence, combined with the loss sensitivities at the
 * unshifted point. Exact for the RX/RY/RZ (and Rot component) gate set.
 */
inline LossGradient parameter_shift_gradient(const Circuit &circuit,
                                             std::span<const double> params,
                                             const LossSpec &loss) {
  LossGradient result;
  result.grad.assign(static_cast<std::size_t>(circuit.num_params), 0.0);

  const StateVector psi = run_circuit(circuit, params);
  result.readout = readout_probabilities(psi, loss.num_classes);
  result.value = cross_entropy_loss(result.readout, loss);
  if (circuit.num_params == 0) return result;
  const std::vector<double> weights =
      cross_entropy_weights(result.readout, loss);

  // Shift one gate occurrence at a time so shared parameter slots still
  // follow the product rule.
  Circuit shifted = circuit;
  for (std::size_t g = 0; g < circuit.gates.size(); ++g) {
    const CircuitGate &cg = circuit.gates[g];
    if (cg.param_index < 0) continue;
    detail::check_trainable_gate(cg);
    const double angle = params[static_cast<std::size_t>(cg.param_index)];

    double partial = 0.0;
    for (const double shift : {std::numbers::pi / 2, -std::numbers::pi / 2}) {
      shifted.gates[g].param_index = -1;
      shifted.gates[g].gate.angles[0] = angle + shift;
      const StateVector state = run_circuit(shifted, params);
      const std::vector<double> z =
          readout_probabilities(state, loss.num_classes);
      double weighted = 0.0;
      for (std::size_t i = 0; i < z.size(); ++i) weighted += weights[i] * z[i];
      partial += (shift > 0 ? 0.5 : -0.5) * weighted;
    }
    shifted.gates[g] = cg;  // restore
    result.grad[static_cast<std::size_t>(cg.param_index)] += partial;
  }
  return result;
}

/// Central finite differences on the full loss pipeline; the independent
/// oracle for the two analytic routes.
inline LossGradient finite_difference_gradient(const Circuit &circuit,
                                               std::span<const double> params,
                                               const LossSpec &loss,
                                               double h = 1e-5) {
  if (h <= 0.0) throw std::invalid_argument("finite differences: h must be > 0");
  auto loss_at = [&](std::span<const double> p) {
    const StateVector state = run_circuit(circuit, p);
    return cross_entropy_loss(readout_probabilities(state, loss.num_classes),
                              loss);
  };
  LossGradient result;
  result.readout = readout_probabilities(run_circuit(circuit, params),
                                         loss.num_classes);
  result.value = cross_entropy_loss(result.readout, loss);
  result.grad.assign(static_cast<std::size_t>(circuit.num_params), 0.0);
  std::vector<double> perturbed(params.begin(), params.end());
  for (std::size_t k = 0; k < perturbed.size(); ++k) {
    const double saved = perturbed[k];
    perturbed[k] = saved + h;
    const double up = loss_at(perturbed);
    perturbed[k] = saved - h;
    const double down = loss_at(perturbed);
    perturbed[k] = saved;
    result.grad[k] = (up - down) / (2.0 * h);
  }
  return result;
}

// Model-level wrappers: gradients of one sample's loss for a full classifier.

inline LossGradient adjoint_gradient(const ModelConfig &config,
                                     const FeatureVector &features,
                                     std::span<const double> params,
                                     const LossSpec &loss) {
  return adjoint_gradient(model_circuit(config, features), params, loss);
}

inline LossGradient parameter_shift_gradient(const ModelConfig &config,
                                             const FeatureVector &features,
                                             std::span<const double> params,
                                             const LossSpec &loss) {
  return parameter_shift_gradient(model_circuit(config, features), params,
                                  loss);
}

inline LossGradient finite_difference_gradient(const ModelConfig &config,
                                               const FeatureVector &features,
                                               std::span<const double> params,
                                               const LossSpec &loss,
                                               double h = 1e-5) {
  return finite_difference_gradient(model_circuit(config, features), params,
                                    loss, h);
}

}  // namespace vqcbench
