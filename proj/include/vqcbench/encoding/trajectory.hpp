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

#include <cstdio>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "vqcbench/encoding/strategy.hpp"
#include "vqcbench/sim/state_vector.hpp"

namespace vqcbench {

/// One Bloch-sphere sample of an embedding circuit at a feature angle.
struct BlochSample {
  double angle = 0.0;
  double x = 0.0, y = 0.0, z = 0.0;
};

/**
 * @brief Bloch trajectory of an angle strategy over [-pi/2, pi/2].
 *
 * Samples `num_points` evenly spaced feature angles (endpoints included) and
 * records the Bloch coordinates of the strategy applied to |0>.
 */
inline std::vector<BlochSample> bloch_trajectory(const EncodingSpec &spec,
                                                 int num_points) {
  if (spec.family != EncodingFamily::Angle) {
    throw std::invalid_argument("bloch_trajectory: Angle family required");
  }
  if (num_points < 2) {
    throw std::invalid_argument("bloch_trajectory: num_points must be >= 2");
  }
  std::vector<BlochSample> samples;
  samples.reserve(static_cast<std::size_t>(num_points));
  const double half_pi = std::numbers::pi / 2.0;
  for (int k = 0; k < num_points; ++k) {
    const double angle =
        -half_pi + std::numbers::pi * k / (num_points - 1);
    const auto bloch = bloch_vector(angle_strategy_state(spec, angle));
    samples.push_back({angle, bloch[0], bloch[1], bloch[2]});
  }
  return samples;
}

/**
 * @brief Writes trajectory rows as `strategy,angle,x,y,z` CSV.
 *
 * LF line endings, nine decimal digits. Call once per strategy on a shared
 * stream after writing the header via write_trajectory_header.
 */
inline void write_trajectory_header(std::ostream &out) {
  out << "strategy,angle,x,y,z\n";
}

inline void write_trajectory_rows(std::ostream &out, const std::string &name,
                                  const std::vector<BlochSample> &samples) {
  char line[160];
  for (const BlochSample &s : samples) {
    std::snprintf(line, sizeof(line), "%s,%.9f,%.9f,%.9f,%.9f\n", name.c_str(),
                  s.angle, s.x, s.y, s.z);
    out << line;
  }
}

}  // namespace vqcbench
