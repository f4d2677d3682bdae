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
#include "vqcbench/sim/gates.hpp"
#include "vqcbench/sim/state_vector.hpp"

using namespace vqcbench;
using vqcbench::testing::kron_expanded_unitary;
using vqcbench::testing::mat2_to_eigen;
using vqcbench::testing::random_gate;
using vqcbench::testing::to_eigen;
using Catch::Approx;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("zero state construction", "[sim]") {
  const StateVector one = new_zero_state(1);
  REQUIRE(one.amplitudes == std::vector<cplx>{cplx(1, 0), cplx(0, 0)});

  const StateVector two = new_zero_state(2);
  REQUIRE(two.size() == 4);
  REQUIRE(two.amplitudes[0] == cplx(1, 0));
  for (std::size_t i = 1; i < 4; ++i) REQUIRE(two.amplitudes[i] == cplx(0, 0));

  REQUIRE_THROWS_AS(new_zero_state(0), std::invalid_argument);
  REQUIRE_THROWS_AS(new_zero_state(25), std::invalid_argument);
}

TEST_CASE("fixed gate matrices", "[sim]") {
  SECTION("RX(0) is the identity") {
    const Mat2 u = single_qubit_matrix(rx_gate(0.0));
    REQUIRE(std::abs(u[0] - cplx(1, 0)) < 1e-15);
    REQUIRE(std::abs(u[1]) < 1e-15);
    REQUIRE(std::abs(u[2]) < 1e-15);
    REQUIRE(std::abs(u[3] - cplx(1, 0)) < 1e-15);
  }
  SECTION("Rot(0,0,0) is the identity") {
    const Mat2 u = single_qubit_matrix(rot_gate(0.0, 0.0, 0.0));
    REQUIRE(std::abs(u[0] - cplx(1, 0)) < 1e-15);
    REQUIRE(std::abs(u[1]) < 1e-15);
    REQUIRE(std::abs(u[2]) < 1e-15);
    REQUIRE(std::abs(u[3] - cplx(1, 0)) < 1e-15);
  }
  SECTION("Hadamard") {
    const Mat2 u = single_qubit_matrix(h_gate());
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    REQUIRE(u[0].real() == Approx(inv_sqrt2));
    REQUIRE(u[1].real() == Approx(inv_sqrt2));
    REQUIRE(u[2].real() == Approx(inv_sqrt2));
    REQUIRE(u[3].real() == Approx(-inv_sqrt2));
  }
  SECTION("CNOT 4x4 layout") {
    const GateMatrix m = gate_matrix(cnot_gate());
    REQUIRE(m.dim == 4);
    REQUIRE(m(0, 0) == cplx(1, 0));
    REQUIRE(m(1, 1) == cplx(1, 0));
    REQUIRE(m(2, 3) == cplx(1, 0));
    REQUIRE(m(3, 2) == cplx(1, 0));
    REQUIRE(m(2, 2) == cplx(0, 0));
  }
  SECTION("Rot equals its RZ/RY/RZ decomposition") {
    const Mat2 rot = single_qubit_matrix(rot_gate(0.3, -1.1, 2.2));
    StateVector by_parts = new_zero_state(1);
    apply_gate_in_place(by_parts, rz_gate(0.3), 0);
    apply_gate_in_place(by_parts, ry_gate(-1.1), 0);
    apply_gate_in_place(by_parts, rz_gate(2.2), 0);
    StateVector direct = new_zero_state(1);
    apply_gate_in_place(direct, rot_gate(0.3, -1.1, 2.2), 0);
    for (int i = 0; i < 2; ++i) {
      REQUIRE(std::abs(by_parts.amplitudes[i] - direct.amplitudes[i]) < 1e-15);
    }
    (void)rot;
  }
}

TEST_CASE("gate matrices are unitary", "[sim]") {
  Rng rng(11);
  const GateKind kinds[] = {GateKind::RX, GateKind::RY, GateKind::RZ,
                            GateKind::H,  GateKind::X,  GateKind::Y,
                            GateKind::Z,  GateKind::Rot};
  for (GateKind kind : kinds) {
    for (int draw = 0; draw < 100; ++draw) {
      GateSpec gate{kind, {}};
      for (int a = 0; a < gate_angle_count(kind); ++a) {
        gate.angles[static_cast<std::size_t>(a)] = rng.uniform(-6.0, 6.0);
      }
      const auto u = mat2_to_eigen(single_qubit_matrix(gate));
      const auto residual =
          (u.adjoint() * u - Eigen::MatrixXcd::Identity(2, 2)).cwiseAbs();
      REQUIRE(residual.maxCoeff() < 1e-12);
    }
  }
  const GateMatrix cnot = gate_matrix(cnot_gate());
  Eigen::MatrixXcd c(4, 4);
  for (int r = 0; r < 4; ++r)
    for (int col = 0; col < 4; ++col) c(r, col) = cnot(r, col);
  REQUIRE((c.adjoint() * c - Eigen::MatrixXcd::Identity(4, 4)).cwiseAbs().maxCoeff() <
          1e-12);
}

TEST_CASE("apply_gate basics", "[sim]") {
  SECTION("RX(pi)|0> = [0, -i]") {
    const StateVector state = apply_gate(new_zero_state(1), rx_gate(pi), 0);
    REQUIRE(std::abs(state.amplitudes[0]) < 1e-15);
    REQUIRE(std::abs(state.amplitudes[1] - cplx(0, -1)) < 1e-15);
  }
  SECTION("CNOT with unmet control leaves |00> alone") {
    StateVector state = new_zero_state(2);
    const ControlQubit control = control_on_one(1);
    apply_gate_in_place(state, cnot_gate(), 0, {&control, 1});
    REQUIRE(state.amplitudes[0] == cplx(1, 0));
  }
  SECTION("CNOT flips the target when the control is set") {
    StateVector state = new_zero_state(2);
    apply_gate_in_place(state, x_gate(), 0);  // |10>
    const ControlQubit control = control_on_one(0);
    apply_gate_in_place(state, cnot_gate(), 1, {&control, 1});
    REQUIRE(std::abs(state.amplitudes[3] - cplx(1, 0)) < 1e-15);  // |11>
  }
  SECTION("RZ then RX equals RX alone up to the phase e^{-ix/2}") {
    const double x = 0.7;
    StateVector with_rz = new_zero_state(1);
    apply_gate_in_place(with_rz, rz_gate(x), 0);
    apply_gate_in_place(with_rz, rx_gate(x), 0);
    const StateVector plain = apply_gate(new_zero_state(1), rx_gate(x), 0);
    REQUIRE(fidelity(with_rz, plain) == Approx(1.0).margin(1e-12));
    const cplx phase = std::polar(1.0, -x / 2.0);
    for (int i = 0; i < 2; ++i) {
      REQUIRE(std::abs(with_rz.amplitudes[i] - phase * plain.amplitudes[i]) <
              1e-12);
    }
  }
  SECTION("index validation") {
    StateVector state = new_zero_state(2);
    REQUIRE_THROWS_AS(apply_gate_in_place(state, x_gate(), 2),
                      std::invalid_argument);
    const ControlQubit bad = control_on_one(1);
    REQUIRE_THROWS_AS(apply_gate_in_place(state, x_gate(), 1, {&bad, 1}),
                      std::invalid_argument);
  }
}

TEST_CASE("apply_gate agrees with the kron-expanded oracle", "[sim]") {
  Rng rng(202);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng.next_below(4));
    const GateSpec gate = random_gate(rng);

    // Random start state.
    StateVector state = new_zero_state(n);
    for (auto &amp : state.amplitudes) {
      amp = cplx(rng.uniform(-1, 1), rng.uniform(-1, 1));
    }
    const double norm = state_norm(state);
    for (auto &amp : state.amplitudes) amp /= norm;

    const int target = static_cast<int>(rng.next_below(n));
    std::vector<ControlQubit> controls;
    const int want_controls =
        gate.kind == GateKind::CNOT && n > 1
            ? 1
            : static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
    for (int q = 0; q < n && static_cast<int>(controls.size()) < want_controls;
         ++q) {
      if (q == target) continue;
      controls.push_back(rng.next_below(2) ? control_on_one(q)
                                           : control_on_zero(q));
    }
    if (gate.kind == GateKind::CNOT && controls.empty()) continue;

    const auto full = kron_expanded_unitary(n, gate, target, controls);
    const Eigen::VectorXcd expected = full * to_eigen(state);
    apply_gate_in_place(state, gate, target, controls);
    const Eigen::VectorXcd actual = to_eigen(state);
    REQUIRE((expected - actual).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("norm preserved over long random sequences", "[sim]") {
  Rng rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 1 + static_cast<int>(rng.next_below(6));
    StateVector state = new_zero_state(n);
    for (int step = 0; step < 100; ++step) {
      GateSpec gate = random_gate(rng);
      const int target = static_cast<int>(rng.next_below(n));
      std::vector<ControlQubit> controls;
      if (gate.kind == GateKind::CNOT) {
        if (n == 1) {
          gate = x_gate();
        } else {
          const int control = (target + 1 + static_cast<int>(rng.next_below(
                                                n - 1))) % n;
          controls.push_back(control_on_one(control));
        }
      }
      apply_gate_in_place(state, gate, target, controls);
    }
    REQUIRE(std::abs(state_norm(state) - 1.0) < 1e-10);
  }
}

TEST_CASE("probabilities and marginals", "[sim]") {
  SECTION("|0> probabilities") {
    REQUIRE(state_probabilities(new_zero_state(1)) ==
            std::vector<double>{1.0, 0.0});
  }
  SECTION("H|0> is uniform") {
    const auto probs =
        state_probabilities(apply_gate(new_zero_state(1), h_gate(), 0));
    REQUIRE(probs[0] == Approx(0.5).margin(1e-12));
    REQUIRE(probs[1] == Approx(0.5).margin(1e-12));
  }
  SECTION("probabilities sum to one") {
    Rng rng(5);
    StateVector state = new_zero_state(3);
    for (int step = 0; step < 40; ++step) {
      GateSpec gate = random_gate(rng);
      if (gate.kind == GateKind::CNOT) gate = x_gate();
      apply_gate_in_place(state, gate, static_cast<int>(rng.next_below(3)));
    }
    const auto probs = state_probabilities(state);
    double total = 0.0;
    for (double p : probs) total += p;
    REQUIRE(total == Approx(1.0).margin(1e-12));
  }
  SECTION("qubit marginals") {
    REQUIRE(qubit_one_probability(new_zero_state(1), 0) == 0.0);
    REQUIRE(qubit_one_probability(apply_gate(new_zero_state(1), h_gate(), 0),
                                  0) == Approx(0.5).margin(1e-12));
    REQUIRE(qubit_one_probability(
                apply_gate(new_zero_state(1), rx_gate(pi), 0), 0) ==
            Approx(1.0).margin(1e-12));
    REQUIRE_THROWS_AS(qubit_one_probability(new_zero_state(2), 2),
                      std::invalid_argument);
  }
  SECTION("marginal respects the MSB convention") {
    StateVector state = new_zero_state(3);
    apply_gate_in_place(state, x_gate(), 0);  // |100> = index 4
    REQUIRE(std::abs(state.amplitudes[4] - cplx(1, 0)) < 1e-15);
    REQUIRE(qubit_one_probability(state, 0) == Approx(1.0));
    REQUIRE(qubit_one_probability(state, 2) == Approx(0.0));
  }
}

TEST_CASE("bloch coordinates", "[sim]") {
  SECTION("poles and equator") {
    const auto north = bloch_vector(new_zero_state(1));
    REQUIRE(north[0] == Approx(0.0).margin(1e-12));
    REQUIRE(north[1] == Approx(0.0).margin(1e-12));
    REQUIRE(north[2] == Approx(1.0).margin(1e-12));

    const auto plus = bloch_vector(apply_gate(new_zero_state(1), h_gate(), 0));
    REQUIRE(plus[0] == Approx(1.0).margin(1e-12));
    REQUIRE(plus[1] == Approx(0.0).margin(1e-12));
    REQUIRE(plus[2] == Approx(0.0).margin(1e-12));

    const auto minus_y =
        bloch_vector(apply_gate(new_zero_state(1), rx_gate(pi / 2), 0));
    REQUIRE(minus_y[0] == Approx(0.0).margin(1e-12));
    REQUIRE(minus_y[1] == Approx(-1.0).margin(1e-12));
    REQUIRE(minus_y[2] == Approx(0.0).margin(1e-12));
  }
  SECTION("multi-qubit states are rejected") {
    REQUIRE_THROWS_AS(bloch_vector(new_zero_state(2)), std::invalid_argument);
  }
  SECTION("rotation axis invariants") {
    Rng rng(3);
    for (int i = 0; i < 50; ++i) {
      const double x = rng.uniform(-pi, pi);
      const auto rx = bloch_vector(apply_gate(new_zero_state(1), rx_gate(x), 0));
      REQUIRE(std::abs(rx[0]) < 1e-12);  // RX keeps the trajectory in y-z
      const auto ry = bloch_vector(apply_gate(new_zero_state(1), ry_gate(x), 0));
      REQUIRE(std::abs(ry[1]) < 1e-12);  // RY keeps the trajectory in x-z
      REQUIRE(rx[0] * rx[0] + rx[1] * rx[1] + rx[2] * rx[2] ==
              Approx(1.0).margin(1e-9));
    }
  }
}
