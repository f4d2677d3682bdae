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
#include <numbers>

#include "oracles.hpp"
#include "vqcbench/autodiff/gradient.hpp"

using namespace vqcbench;
using Catch::Approx;

namespace {
constexpr double pi = std::numbers::pi;

/// Single trainable RY on one qubit; loss = cross-entropy against label 1,
/// which for p = P(|1>) = sin^2(theta/2) has d(-ln p)/dtheta known in closed
/// form. With label semantics the raw probability path is easier: use a
/// circuit whose loss is evaluated directly through the library.
Circuit single_ry_circuit() {
  Circuit circuit;
  circuit.num_qubits = 1;
  circuit.num_params = 1;
  append_trainable(circuit, GateKind::RY, 0, 0);
  return circuit;
}

/// Random small model over both encodable families.
ModelConfig random_model(Rng &rng, bool allow_multiclass = true) {
  ModelConfig config;
  config.num_qubits = 1 + static_cast<int>(rng.next_below(4));
  config.layers = 1 + static_cast<int>(rng.next_below(4));
  const bool amplitude = rng.next_below(3) == 0;
  if (amplitude) {
    config.encoding = amplitude_spec();
  } else {
    const auto catalog = enumerate_angle_strategies();
    config.encoding = catalog[rng.next_below(catalog.size())];
  }
  config.reuploading = config.layers % 2 == 0 && rng.next_below(2) == 1;
  config.num_classes =
      allow_multiclass && config.num_qubits >= 3 && rng.next_below(2) == 1
          ? 3
          : 2;
  return config;
}

FeatureVector random_features(Rng &rng, const ModelConfig &config) {
  if (config.encoding.family == EncodingFamily::Amplitude) {
    const auto unit = vqcbench::testing::random_unit_vector(
        rng, std::size_t{1} << config.num_qubits);
    return FeatureVector(unit.begin(), unit.end());
  }
  FeatureVector features;
  for (int q = 0; q < config.num_qubits; ++q) {
    features.push_back(rng.uniform(0.05, pi - 0.05));
  }
  return features;
}
}  // namespace

TEST_CASE("probability readout gradient of a single RY", "[autodiff]") {
  // P(|1>) = sin^2(theta/2). Using loss = -ln(p) for label 1:
  // dL/dtheta = -p'/p with p' = sin(theta)/2.
  const Circuit circuit = single_ry_circuit();
  const LossSpec loss{2, 1};

  SECTION("theta = pi/2") {
    const double theta = pi / 2;
    const std::vector<double> params = {theta};
    const double p = std::sin(theta / 2) * std::sin(theta / 2);
    const double expected = -(std::sin(theta) / 2) / p;
    const LossGradient adj = adjoint_gradient(circuit, params, loss);
    REQUIRE(adj.grad[0] == Approx(expected).margin(1e-12));
    const LossGradient shift = parameter_shift_gradient(circuit, params, loss);
    REQUIRE(shift.grad[0] == Approx(expected).margin(1e-12));
    const LossGradient fd = finite_difference_gradient(circuit, params, loss);
    REQUIRE(fd.grad[0] == Approx(expected).margin(1e-6));
    // The raw probability derivative itself: dp/dtheta at pi/2 is 0.5.
    REQUIRE(std::sin(theta) / 2 == Approx(0.5));
  }
  SECTION("theta at the loss extremum") {
    // p = 1 at theta = pi, so -ln p is minimal and the gradient vanishes.
    const std::vector<double> params = {pi};
    const LossGradient adj = adjoint_gradient(circuit, params, loss);
    REQUIRE(adj.grad[0] == Approx(0.0).margin(1e-9));
  }
}

TEST_CASE("zero-depth circuit has an empty gradient", "[autodiff]") {
  Circuit circuit;
  circuit.num_qubits = 1;
  circuit.num_params = 0;
  const LossGradient lg = adjoint_gradient(circuit, {}, LossSpec{2, 0});
  REQUIRE(lg.grad.empty());
  REQUIRE(lg.value == Approx(-std::log(1.0 - 1e-12)));
}

TEST_CASE("Rot contributes three shift parameters", "[autodiff]") {
  Circuit circuit;
  circuit.num_qubits = 1;
  circuit.num_params = 3;
  append_trainable(circuit, GateKind::RZ, 0, 0);
  append_trainable(circuit, GateKind::RY, 0, 1);
  append_trainable(circuit, GateKind::RZ, 0, 2);
  const std::vector<double> params = {0.3, 0.8, -0.4};
  const LossSpec loss{2, 1};
  const LossGradient shift = parameter_shift_gradient(circuit, params, loss);
  const LossGradient adj = adjoint_gradient(circuit, params, loss);
  REQUIRE(shift.grad.size() == 3);
  for (int k = 0; k < 3; ++k) {
    REQUIRE(shift.grad[k] == Approx(adj.grad[k]).margin(1e-10));
  }
}

TEST_CASE("finite differences on a constant loss", "[autodiff]") {
  // RZ rotations never change the readout probability of |0...0>.
  Circuit circuit;
  circuit.num_qubits = 1;
  circuit.num_params = 2;
  append_trainable(circuit, GateKind::RZ, 0, 0);
  append_trainable(circuit, GateKind::RZ, 0, 1);
  const LossGradient fd =
      finite_difference_gradient(circuit, {{0.4, 1.1}}, LossSpec{2, 0});
  REQUIRE(fd.grad[0] == Approx(0.0).margin(1e-9));
  REQUIRE(fd.grad[1] == Approx(0.0).margin(1e-9));
}

TEST_CASE("three-way agreement on random models", "[autodiff]") {
  Rng rng(77);
  int checked = 0;
  while (checked < 12) {
    const ModelConfig config = random_model(rng);
    const FeatureVector features = random_features(rng, config);
    std::vector<double> params(static_cast<std::size_t>(param_count(config)));
    for (double &p : params) p = rng.uniform(0.0, 2.0 * pi);
    const LossSpec loss{config.num_classes,
                        static_cast<int>(rng.next_below(config.num_classes))};

    const Circuit circuit = model_circuit(config, features);
    const LossGradient adj = adjoint_gradient(circuit, params, loss);
    const LossGradient shift = parameter_shift_gradient(circuit, params, loss);
    const LossGradient fd = finite_difference_gradient(circuit, params, loss);

    REQUIRE(adj.value == Approx(shift.value).margin(1e-12));
    for (std::size_t k = 0; k < params.size(); ++k) {
      REQUIRE(adj.grad[k] == Approx(shift.grad[k]).margin(1e-8));
      REQUIRE(adj.grad[k] == Approx(fd.grad[k]).margin(1e-4));
    }
    ++checked;
  }
}

TEST_CASE("gradient ignores global phase", "[autodiff]") {
  // An RZ acting on |0> multiplies the whole state by e^{-i a/2}; inserting
  // it first must not move any gradient.
  ModelConfig config;
  config.encoding = encoding_from_name("RY");
  config.num_qubits = 2;
  config.layers = 2;
  config.num_classes = 2;
  const FeatureVector features = {0.7, 2.1};
  Rng rng(5);
  std::vector<double> params(static_cast<std::size_t>(param_count(config)));
  for (double &p : params) p = rng.uniform(0.0, 2.0 * pi);
  const LossSpec loss{2, 1};

  const Circuit plain = model_circuit(config, features);
  Circuit phased = plain;
  phased.gates.insert(phased.gates.begin(),
                      CircuitGate{rz_gate(0.37), 0, {}, -1});

  const LossGradient a = adjoint_gradient(plain, params, loss);
  const LossGradient b = adjoint_gradient(phased, params, loss);
  REQUIRE(a.value == Approx(b.value).margin(1e-12));
  for (std::size_t k = 0; k < params.size(); ++k) {
    REQUIRE(a.grad[k] == Approx(b.grad[k]).margin(1e-12));
  }
}

TEST_CASE("trainable gates must be uncontrolled rotations", "[autodiff]") {
  Circuit circuit;
  circuit.num_qubits = 2;
  circuit.num_params = 1;
  circuit.gates.push_back(
      CircuitGate{ry_gate(0.0), 1, {control_on_one(0)}, 0});
  REQUIRE_THROWS_AS(adjoint_gradient(circuit, {{0.5}}, LossSpec{2, 0}),
                    std::invalid_argument);
}
