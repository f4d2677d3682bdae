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

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "vqcbench/encoding/amplitude.hpp"
#include "vqcbench/sim/state_vector.hpp"

namespace vqcbench {

/// One basis-encoded element: an M-bit feature value and its index.
struct BasisItem {
  std::uint64_t feature_bits = 0;
  std::uint64_t index_bits = 0;
};

/**
 * @brief Equal-weight superposition of |x_i>|i> over all items.
 *
 * Uses M + log2(N) qubits: the feature bits occupy the top (most
 * significant) M wires and the index bits the bottom log2(N). N, the item
 * count, must be a power of two; every feature must fit in M bits.
 */
inline StateVector basis_encode(const std::vector<BasisItem> &items,
                                int feature_bits) {
  const std::size_t n_items = items.size();
  if (!is_power_of_two(n_items)) {
    throw std::invalid_argument("basis_encode: item count must be a power of two");
  }
  if (feature_bits < 1) {
    throw std::invalid_argument("basis_encode: feature_bits must be >= 1");
  }
  int index_bits = 0;
  while ((std::size_t{1} << index_bits) < n_items) ++index_bits;
  const int num_qubits = feature_bits + index_bits;
  if (num_qubits > kMaxQubits) {
    throw std::invalid_argument("basis_encode: register exceeds qubit cap");
  }

  StateVector state;
  state.num_qubits = num_qubits;
  state.amplitudes.assign(std::size_t{1} << num_qubits, cplx(0, 0));
  const double amp = 1.0 / std::sqrt(static_cast<double>(n_items));
  for (const BasisItem &item : items) {
    if (item.feature_bits >> feature_bits) {
      throw std::invalid_argument("basis_encode: feature value overflows M bits");
    }
    if (item.index_bits >= n_items) {
      throw std::invalid_argument("basis_encode: index value out of range");
    }
    const std::size_t basis =
        (item.feature_bits << index_bits) | item.index_bits;
    if (state.amplitudes[basis] != cplx(0, 0)) {
      throw std::invalid_argument("basis_encode: duplicate (feature, index) slot");
    }
    state.amplitudes[basis] = cplx(amp, 0);
  }
  return state;
}

}  // namespace vqcbench
