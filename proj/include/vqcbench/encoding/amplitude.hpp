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
 * @file amplitude.hpp
 * Amplitude embedding: L2 normalization of feature vectors and state
 * preparation via uniformly controlled rotations (Mottonen decomposition).
 */
#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "vqcbench/encoding/angle.hpp"
#include "vqcbench/sim/gates.hpp"

namespace vqcbench {

inline bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

/// Smallest power of two >= n (n >= 1).
inline std::size_t next_power_of_two(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

/**
 * @brief Zero-pads to the next power of two and divides by the L2 norm.
 *
 * Rejects the all-zero vector: it has no direction to encode.
 */
inline FeatureVector amplitude_normalize(const FeatureVector &raw) {
  if (raw.empty()) {
    throw std::invalid_argument("amplitude_normalize: empty feature vector");
  }
  FeatureVector padded = raw;
  padded.resize(next_power_of_two(raw.size()), 0.0);
  double norm_sq = 0.0;
  for (double v : padded) norm_sq += v * v;
  if (norm_sq <= 0.0) {
    throw std::invalid_argument(
        "amplitude_normalize: all-zero vector has undefined direction");
  }
  const double inv = 1.0 / std::sqrt(norm_sq);
  for (double &v : padded) v *= inv;
  return padded;
}

namespace detail {

/// Controls for prefix value `prefix` on qubits 0..width-1 (qubit 0 = MSB).
inline std::vector<ControlQubit> prefix_controls(std::size_t prefix,
                                                 int width) {
  std::vector<ControlQubit> controls;
  controls.reserve(static_cast<std::size_t>(width));
  for (int c = 0; c < width; ++c) {
    const bool one = (prefix >> (width - 1 - c)) & 1;
    controls.push_back(one ? control_on_one(c) : control_on_zero(c));
  }
  return controls;
}

}  // namespace detail

/**
 * @brief State-preparation circuit for a normalized target vector.
 *
 * Builds the binary-tree angle recursion of the Mottonen decomposition: for
 * level k = 1..n a multiplexed RY on qubit k-1, controlled on all prefix
 * qubits with both polarities, rotates each branch amplitude into its two
 * children. For real targets the RY angles are 2*atan2(child1, child0), so
 * sign information rides in the angles and no phase stage is needed. For
 * complex targets the RY stage acts on magnitudes and a uniformly controlled
 * RZ stage imprints the relative phases (global phase is left uncorrected).
 *
 * Executing the returned sequence on |0...0> reproduces the target up to
 * global phase.
 */
inline std::vector<GateApplication> mottonen_prepare(
    const std::vector<cplx> &target, int num_qubits) {
  const std::size_t dim = target.size();
  if (!is_power_of_two(dim) || dim != (std::size_t{1} << num_qubits)) {
    throw std::invalid_argument(
        "mottonen_prepare: target length must be 2^num_qubits");
  }
  double norm_sq = 0.0;
  bool complex_target = false;
  for (const cplx &c : target) {
    norm_sq += std::norm(c);
    if (std::abs(c.imag()) > 1e-12) complex_target = true;
  }
  if (std::abs(norm_sq - 1.0) > 1e-9) {
    throw std::invalid_argument("mottonen_prepare: target must be normalized");
  }

  // Magnitude tree: level n holds the target (real values or magnitudes),
  // level k-1 holds the parent hypotenuses. ry_angles[k-1][j] rotates the
  // branch with (k-1)-bit prefix j.
  std::vector<double> level(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    level[i] = complex_target ? std::abs(target[i]) : target[i].real();
  }
  std::vector<std::vector<double>> ry_angles(
      static_cast<std::size_t>(num_qubits));
  for (int k = num_qubits; k >= 1; --k) {
    const std::size_t half = std::size_t{1} << (k - 1);
    std::vector<double> parents(half);
    ry_angles[static_cast<std::size_t>(k - 1)].resize(half);
    for (std::size_t j = 0; j < half; ++j) {
      const double a = level[2 * j];
      const double b = level[2 * j + 1];
      const double r = std::hypot(a, b);
      ry_angles[static_cast<std::size_t>(k - 1)][j] =
          r > 0.0 ? 2.0 * std::atan2(b, a) : 0.0;
      parents[j] = r;
    }
    level = std::move(parents);
  }

  std::vector<GateApplication> gates;
  gates.reserve(dim - 1);
  for (int k = 1; k <= num_qubits; ++k) {
    const auto &angles = ry_angles[static_cast<std::size_t>(k - 1)];
    for (std::size_t j = 0; j < angles.size(); ++j) {
      gates.push_back(
          {ry_gate(angles[j]), k - 1, detail::prefix_controls(j, k - 1)});
    }
  }

  if (complex_target) {
    // Phase stage: multiplexed RZ per level, pairwise phase differences
    // bubbling the mean phase upward. The residual root phase is global.
    std::vector<double> phases(dim);
    for (std::size_t i = 0; i < dim; ++i) phases[i] = std::arg(target[i]);
    for (int k = num_qubits; k >= 1; --k) {
      const std::size_t half = std::size_t{1} << (k - 1);
      std::vector<double> parents(half);
      for (std::size_t j = 0; j < half; ++j) {
        gates.push_back({rz_gate(phases[2 * j + 1] - phases[2 * j]), k - 1,
                         detail::prefix_controls(j, k - 1)});
        parents[j] = 0.5 * (phases[2 * j] + phases[2 * j + 1]);
      }
      phases = std::move(parents);
    }
  }
  return gates;
}

/// Real-vector overload used by the benchmark pipeline.
inline std::vector<GateApplication> mottonen_prepare(
    const FeatureVector &target, int num_qubits) {
  std::vector<cplx> complex_target(target.begin(), target.end());
  return mottonen_prepare(complex_target, num_qubits);
}

}  // namespace vqcbench
