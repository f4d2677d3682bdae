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
 * @file gates.hpp
 * Gate descriptions and their unitary matrices.
 */
#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace vqcbench {

using cplx = std::complex<double>;

/// 2x2 complex matrix in row-major order: {m00, m01, m10, m11}.
using Mat2 = std::array<cplx, 4>;

enum class GateKind : std::uint8_t { RX, RY, RZ, H, X, Y, Z, Rot, CNOT };

inline const char *gate_kind_name(GateKind kind) {
  switch (kind) {
    case GateKind::RX: return "RX";
    case GateKind::RY: return "RY";
    case GateKind::RZ: return "RZ";
    case GateKind::H: return "H";
    case GateKind::X: return "X";
    case GateKind::Y: return "Y";
    case GateKind::Z: return "Z";
    case GateKind::Rot: return "Rot";
    case GateKind::CNOT: return "CNOT";
  }
  return "?";
}

/// Number of rotation angles a gate kind carries.
inline int gate_angle_count(GateKind kind) {
  switch (kind) {
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ: return 1;
    case GateKind::Rot: return 3;
    default: return 0;
  }
}

/**
 * @brief A gate kind together with its angle parameters (radians).
 *
 * Rot carries (phi, theta, gamma) and denotes the sequence
 * RZ(phi) -> RY(theta) -> RZ(gamma), applied in that time order.
 */
struct GateSpec {
  GateKind kind = GateKind::X;
  std::array<double, 3> angles{0.0, 0.0, 0.0};
};

inline GateSpec rx_gate(double theta) { return {GateKind::RX, {theta, 0, 0}}; }
inline GateSpec ry_gate(double theta) { return {GateKind::RY, {theta, 0, 0}}; }
inline GateSpec rz_gate(double theta) { return {GateKind::RZ, {theta, 0, 0}}; }
inline GateSpec h_gate() { return {GateKind::H, {}}; }
inline GateSpec x_gate() { return {GateKind::X, {}}; }
inline GateSpec y_gate() { return {GateKind::Y, {}}; }
inline GateSpec z_gate() { return {GateKind::Z, {}}; }
inline GateSpec rot_gate(double phi, double theta, double gamma) {
  return {GateKind::Rot, {phi, theta, gamma}};
}
inline GateSpec cnot_gate() { return {GateKind::CNOT, {}}; }

enum class ControlPolarity : std::uint8_t { ActiveOnOne, ActiveOnZero };

/// One control wire of a controlled application.
struct ControlQubit {
  int qubit = 0;
  ControlPolarity polarity = ControlPolarity::ActiveOnOne;
};

inline ControlQubit control_on_one(int qubit) {
  return {qubit, ControlPolarity::ActiveOnOne};
}
inline ControlQubit control_on_zero(int qubit) {
  return {qubit, ControlPolarity::ActiveOnZero};
}

/// A gate bound to a target wire plus optional control wires.
struct GateApplication {
  GateSpec gate;
  int target = 0;
  std::vector<ControlQubit> controls;
};

namespace detail {

inline Mat2 rx_matrix(double theta) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  return {cplx(c, 0), cplx(0, -s), cplx(0, -s), cplx(c, 0)};
}

inline Mat2 ry_matrix(double theta) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  return {cplx(c, 0), cplx(-s, 0), cplx(s, 0), cplx(c, 0)};
}

inline Mat2 rz_matrix(double theta) {
  return {std::polar(1.0, -theta / 2.0), cplx(0, 0), cplx(0, 0),
          std::polar(1.0, theta / 2.0)};
}

inline Mat2 mat2_mul(const Mat2 &a, const Mat2 &b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

}  // namespace detail

/**
 * @brief The 2x2 unitary of a single-qubit gate kind.
 *
 * Rot(phi, theta, gamma) is the matrix product RZ(gamma)*RY(theta)*RZ(phi),
 * i.e. RZ(phi) acts first in time; this is the usual general single-qubit
 * rotation parameterization.
 *
 * Throws std::invalid_argument for CNOT (not a single-qubit gate).
 */
inline Mat2 single_qubit_matrix(const GateSpec &gate) {
  constexpr double inv_sqrt2 = 0.70710678118654752440;
  switch (gate.kind) {
    case GateKind::RX: return detail::rx_matrix(gate.angles[0]);
    case GateKind::RY: return detail::ry_matrix(gate.angles[0]);
    case GateKind::RZ: return detail::rz_matrix(gate.angles[0]);
    case GateKind::H:
      return {cplx(inv_sqrt2, 0), cplx(inv_sqrt2, 0), cplx(inv_sqrt2, 0),
              cplx(-inv_sqrt2, 0)};
    case GateKind::X: return {cplx(0, 0), cplx(1, 0), cplx(1, 0), cplx(0, 0)};
    case GateKind::Y: return {cplx(0, 0), cplx(0, -1), cplx(0, 1), cplx(0, 0)};
    case GateKind::Z: return {cplx(1, 0), cplx(0, 0), cplx(0, 0), cplx(-1, 0)};
    case GateKind::Rot:
      return detail::mat2_mul(
          detail::rz_matrix(gate.angles[2]),
          detail::mat2_mul(detail::ry_matrix(gate.angles[1]),
                           detail::rz_matrix(gate.angles[0])));
    case GateKind::CNOT:
      throw std::invalid_argument("CNOT has no single-qubit matrix");
  }
  throw std::invalid_argument("unknown gate kind");
}

/// Dense square complex matrix, row-major.
struct GateMatrix {
  std::size_t dim = 0;
  std::vector<cplx> data;

  cplx operator()(std::size_t row, std::size_t col) const {
    return data[row * dim + col];
  }
};

/**
 * @brief Matrix representation of a gate: 2x2 for single-qubit kinds,
 * 4x4 for CNOT (control on the more significant qubit).
 */
inline GateMatrix gate_matrix(const GateSpec &gate) {
  if (gate.kind == GateKind::CNOT) {
    GateMatrix m;
    m.dim = 4;
    m.data.assign(16, cplx(0, 0));
    m.data[0 * 4 + 0] = 1;
    m.data[1 * 4 + 1] = 1;
    m.data[2 * 4 + 3] = 1;
    m.data[3 * 4 + 2] = 1;
    return m;
  }
  const Mat2 u = single_qubit_matrix(gate);
  GateMatrix m;
  m.dim = 2;
  m.data.assign(u.begin(), u.end());
  return m;
}

/// Inverse of a gate: rotations negate their angles, the rest are involutions.
inline GateSpec inverse_gate(const GateSpec &gate) {
  GateSpec inv = gate;
  switch (gate.kind) {
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
      inv.angles[0] = -gate.angles[0];
      break;
    case GateKind::Rot:
      // (RZ(p) RY(t) RZ(g))^-1 = RZ(-g) RY(-t) RZ(-p) in time order.
      inv.angles = {-gate.angles[2], -gate.angles[1], -gate.angles[0]};
      break;
    default:
      break;
  }
  return inv;
}

}  // namespace vqcbench
