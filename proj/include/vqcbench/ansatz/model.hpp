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
 * @file model.hpp
 * Full classifier circuits: an embedding stage plus strongly entangling
 * layers, optionally re-uploading the data between layer blocks.
 */
#pragma once

#include <stdexcept>
#include <vector>

#include "vqcbench/ansatz/strongly_entangling.hpp"
#include "vqcbench/encoding/amplitude.hpp"
#include "vqcbench/encoding/angle.hpp"
#include "vqcbench/encoding/strategy.hpp"
#include "vqcbench/sim/circuit.hpp"

namespace vqcbench {

/// One cell of the sweep grid.
struct ModelConfig {
  EncodingSpec encoding;
  int num_qubits = 0;
  int layers = 0;
  bool reuploading = false;
  int num_classes = 2;
};

/// Trainable parameter count: layers * qubits * 3.
inline int param_count(const ModelConfig &config) {
  return config.layers * config.num_qubits * 3;
}

/// With re-uploading the layer stack splits into blocks of this many layers,
/// each preceded by a fresh copy of the embedding circuit.
inline constexpr int kReuploadBlockLayers = 2;

namespace detail {

inline std::vector<GateApplication> encoding_gates(const ModelConfig &config,
                                                   const FeatureVector &features) {
  switch (config.encoding.family) {
    case EncodingFamily::Angle:
      if (static_cast<int>(features.size()) != config.num_qubits) {
        throw std::invalid_argument(
            "model circuit: Angle encoding needs one feature per qubit");
      }
      return angle_encoding_gates(config.encoding, features);
    case EncodingFamily::Amplitude:
      if (features.size() != (std::size_t{1} << config.num_qubits)) {
        throw std::invalid_argument(
            "model circuit: Amplitude encoding needs 2^num_qubits features");
      }
      return mottonen_prepare(features, config.num_qubits);
    case EncodingFamily::Basis:
      throw std::invalid_argument(
          "model circuit: Basis encoding has no per-sample model pipeline");
  }
  throw std::invalid_argument("model circuit: unknown encoding family");
}

}  // namespace detail

/**
 * @brief Assembles the model circuit for one sample.
 *
 * Without re-uploading: [encode][layer 1]...[layer L]. With re-uploading the
 * L layers (L even) form L/2 blocks of two, each block preceded by the
 * embedding: [encode][l1][l2][encode][l3][l4]... Parameters stay distinct
 * per layer, so the trainable count is layers*qubits*3 either way.
 */
inline Circuit model_circuit(const ModelConfig &config,
                             const FeatureVector &features) {
  if (config.layers < 1) {
    throw std::invalid_argument("model circuit: layers must be >= 1");
  }
  if (config.reuploading && config.layers % kReuploadBlockLayers != 0) {
    throw std::invalid_argument(
        "model circuit: re-uploading requires an even layer count");
  }
  Circuit circuit;
  circuit.num_qubits = config.num_qubits;
  circuit.num_params = param_count(config);

  const auto encode = detail::encoding_gates(config, features);
  const int layers_per_block =
      config.reuploading ? kReuploadBlockLayers : config.layers;
  for (int layer = 0; layer < config.layers; ++layer) {
    if (layer % layers_per_block == 0) {
      for (const GateApplication &g : encode) append_fixed(circuit, g);
    }
    append_entangling_layer(circuit, layer, layer * config.num_qubits * 3);
  }
  return circuit;
}

/// Runs the full model on |0...0> with a flat parameter vector.
inline StateVector build_and_run(const ModelConfig &config,
                                 const FeatureVector &features,
                                 std::span<const double> params) {
  return run_circuit(model_circuit(config, features), params);
}

inline StateVector build_and_run(const ModelConfig &config,
                                 const FeatureVector &features,
                                 const AnsatzParams &params) {
  if (params.layers != config.layers ||
      params.num_qubits != config.num_qubits) {
    throw std::invalid_argument("build_and_run: parameter shape mismatch");
  }
  return build_and_run(config, features, std::span<const double>(params.values));
}

}  // namespace vqcbench
