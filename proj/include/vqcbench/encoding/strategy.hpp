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
 * @file strategy.hpp
 * Embedding strategy descriptions: the angle-encoding catalog, equivalence
 * testing of angle circuits, and deduplication of the permutation universe.
 *
 * An angle strategy is an ordered tag list such as "H-RY-RZ": tags are
 * applied left to right in time order, every rotation tag on one qubit
 * receives that qubit's single feature value as its angle.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "vqcbench/sim/gates.hpp"
#include "vqcbench/sim/state_vector.hpp"

namespace vqcbench {

enum class EncodingFamily : std::uint8_t { Angle, Amplitude, Basis };

enum class AngleTag : std::uint8_t { H, RX, RY, RZ };

inline const char *angle_tag_name(AngleTag tag) {
  switch (tag) {
    case AngleTag::H: return "H";
    case AngleTag::RX: return "RX";
    case AngleTag::RY: return "RY";
    case AngleTag::RZ: return "RZ";
  }
  return "?";
}

struct EncodingSpec {
  EncodingFamily family = EncodingFamily::Angle;
  std::vector<AngleTag> gate_tags;  // Angle only; empty otherwise
  std::string name;
};

namespace detail {

inline std::string joined_tag_name(const std::vector<AngleTag> &tags) {
  std::string name;
  for (std::size_t i = 0; i < tags.size(); ++i) {
    if (i > 0) name += '-';
    name += angle_tag_name(tags[i]);
  }
  return name;
}

inline void validate_angle_tags(const std::vector<AngleTag> &tags) {
  if (tags.empty() || tags.size() > 4) {
    throw std::invalid_argument("angle strategy must carry 1 to 4 tags");
  }
  int counts[4] = {0, 0, 0, 0};
  for (std::size_t i = 0; i < tags.size(); ++i) {
    if (tags[i] == AngleTag::H && i != 0) {
      throw std::invalid_argument("H may appear only as the first tag");
    }
    counts[static_cast<int>(tags[i])]++;
  }
  for (int c : counts) {
    if (c > 1) throw std::invalid_argument("repeated tag in angle strategy");
  }
}

}  // namespace detail

inline EncodingSpec angle_spec(std::vector<AngleTag> tags) {
  detail::validate_angle_tags(tags);
  EncodingSpec spec;
  spec.family = EncodingFamily::Angle;
  spec.name = detail::joined_tag_name(tags);
  spec.gate_tags = std::move(tags);
  return spec;
}

inline EncodingSpec amplitude_spec() {
  return {EncodingFamily::Amplitude, {}, "Amplitude"};
}

inline EncodingSpec basis_spec() {
  return {EncodingFamily::Basis, {}, "Basis"};
}

/// Parses "RY", "H-RZ-RX", "Amplitude", or "Basis".
inline EncodingSpec encoding_from_name(const std::string &name) {
  if (name == "Amplitude") return amplitude_spec();
  if (name == "Basis") return basis_spec();
  std::vector<AngleTag> tags;
  std::size_t start = 0;
  while (start <= name.size()) {
    const std::size_t dash = name.find('-', start);
    const std::string part = name.substr(
        start, dash == std::string::npos ? std::string::npos : dash - start);
    if (part == "H") tags.push_back(AngleTag::H);
    else if (part == "RX") tags.push_back(AngleTag::RX);
    else if (part == "RY") tags.push_back(AngleTag::RY);
    else if (part == "RZ") tags.push_back(AngleTag::RZ);
    else throw std::invalid_argument("unknown encoding name: " + name);
    if (dash == std::string::npos) break;
    start = dash + 1;
  }
  return angle_spec(std::move(tags));
}

/// Applies one angle strategy to a single qubit of `state` with angle `x`.
inline void apply_angle_tags_to_qubit(StateVector &state,
                                      const std::vector<AngleTag> &tags,
                                      int qubit, double x) {
  for (AngleTag tag : tags) {
    switch (tag) {
      case AngleTag::H: apply_gate_in_place(state, h_gate(), qubit); break;
      case AngleTag::RX: apply_gate_in_place(state, rx_gate(x), qubit); break;
      case AngleTag::RY: apply_gate_in_place(state, ry_gate(x), qubit); break;
      case AngleTag::RZ: apply_gate_in_place(state, rz_gate(x), qubit); break;
    }
  }
}

/// Single-qubit state produced by a strategy at feature value `x`.
inline StateVector angle_strategy_state(const EncodingSpec &spec, double x) {
  if (spec.family != EncodingFamily::Angle) {
    throw std::invalid_argument("angle_strategy_state: Angle family required");
  }
  StateVector state = new_zero_state(1);
  apply_angle_tags_to_qubit(state, spec.gate_tags, 0, x);
  return state;
}

/**
 * @brief The catalog of 20 distinct angle-encoding strategies.
 *
 * Ordered by tag count ascending, then lexicographically by name:
 * {RX, RY}, the six 2-tag circuits, the eight 3-tag circuits, and the four
 * H-prefixed 4-tag circuits. Strategies equivalent up to global phase on
 * |0> — and feature-independent ones such as a lone RZ — are absent.
 * dedup_strategies applied to the full permutation universe reproduces this
 * list; the catalog here is spelled out so the two routes stay independent.
 */
inline std::vector<EncodingSpec> enumerate_angle_strategies() {
  static const std::vector<EncodingSpec> catalog = [] {
    const char *names[20] = {
        "RX",         "RY",                                       // 1 tag
        "H-RY",       "H-RZ",       "RX-RY",      "RX-RZ",
        "RY-RX",      "RY-RZ",                                    // 2 tags
        "H-RY-RX",    "H-RY-RZ",    "H-RZ-RX",    "H-RZ-RY",
        "RX-RY-RZ",   "RX-RZ-RY",   "RY-RX-RZ",   "RY-RZ-RX",     // 3 tags
        "H-RY-RX-RZ", "H-RY-RZ-RX", "H-RZ-RX-RY", "H-RZ-RY-RX"};  // 4 tags
    std::vector<EncodingSpec> list;
    list.reserve(20);
    for (const char *name : names) list.push_back(encoding_from_name(name));
    return list;
  }();
  return catalog;
}

/**
 * @brief Every valid H-optional sequence of up to three distinct rotations.
 *
 * This is the raw permutation universe before equivalence pruning: 15
 * rotation orderings, each with and without an H prefix, plus the lone "H".
 * Ordered by tag count ascending, then lexicographically by name.
 */
inline std::vector<EncodingSpec> angle_strategy_universe() {
  const AngleTag rots[3] = {AngleTag::RX, AngleTag::RY, AngleTag::RZ};
  std::vector<std::vector<AngleTag>> sequences;
  sequences.push_back({});  // H alone once prefixed
  for (int a = 0; a < 3; ++a) {
    sequences.push_back({rots[a]});
    for (int b = 0; b < 3; ++b) {
      if (b == a) continue;
      sequences.push_back({rots[a], rots[b]});
      for (int c = 0; c < 3; ++c) {
        if (c == a || c == b) continue;
        sequences.push_back({rots[a], rots[b], rots[c]});
      }
    }
  }
  std::vector<EncodingSpec> universe;
  for (const auto &seq : sequences) {
    if (!seq.empty()) universe.push_back(angle_spec(seq));
    std::vector<AngleTag> with_h;
    with_h.reserve(seq.size() + 1);
    with_h.push_back(AngleTag::H);
    with_h.insert(with_h.end(), seq.begin(), seq.end());
    universe.push_back(angle_spec(std::move(with_h)));
  }
  std::sort(universe.begin(), universe.end(),
            [](const EncodingSpec &a, const EncodingSpec &b) {
              if (a.gate_tags.size() != b.gate_tags.size()) {
                return a.gate_tags.size() < b.gate_tags.size();
              }
              return a.name < b.name;
            });
  return universe;
}

/**
 * @brief True iff the two strategies produce the same single-qubit state up
 * to global phase at every probe angle.
 *
 * Probes are `samples` evenly spaced angles over [0, pi]; equality per angle
 * is fidelity >= 1 - tol. Both specs must be Angle family.
 */
inline bool strategies_equivalent(const EncodingSpec &a, const EncodingSpec &b,
                                  int samples = 16, double tol = 1e-9) {
  if (a.family != EncodingFamily::Angle ||
      b.family != EncodingFamily::Angle) {
    throw std::invalid_argument("strategies_equivalent: Angle family required");
  }
  if (samples < 2) {
    throw std::invalid_argument("strategies_equivalent: samples must be >= 2");
  }
  for (int k = 0; k < samples; ++k) {
    const double x = std::numbers::pi * k / (samples - 1);
    if (fidelity(angle_strategy_state(a, x), angle_strategy_state(b, x)) <
        1.0 - tol) {
      return false;
    }
  }
  return true;
}

/// A strategy that never leaves its x = 0 state encodes nothing.
inline bool strategy_feature_independent(const EncodingSpec &spec,
                                         int samples = 16,
                                         double tol = 1e-9) {
  const StateVector at_zero = angle_strategy_state(spec, 0.0);
  for (int k = 1; k < samples; ++k) {
    const double x = std::numbers::pi * k / (samples - 1);
    if (fidelity(at_zero, angle_strategy_state(spec, x)) < 1.0 - tol) {
      return false;
    }
  }
  return true;
}

struct DedupEntry {
  EncodingSpec kept;
  std::vector<std::string> merged;  // names folded into this representative
};

/**
 * @brief Prunes a strategy list to one representative per equivalence class.
 *
 * Feature-independent strategies (lone RZ, lone H, H-RX, ...) are dropped
 * outright; among the rest the first strategy of each class in input order
 * is kept. Applied to angle_strategy_universe() this reproduces exactly the
 * 20-entry catalog of enumerate_angle_strategies().
 */
inline std::vector<DedupEntry> dedup_strategies_detailed(
    const std::vector<EncodingSpec> &raw, int samples = 16,
    double tol = 1e-9) {
  std::vector<DedupEntry> classes;
  for (const EncodingSpec &spec : raw) {
    if (spec.family != EncodingFamily::Angle) {
      throw std::invalid_argument("dedup_strategies: Angle family required");
    }
    if (strategy_feature_independent(spec, samples, tol)) continue;
    bool merged = false;
    for (DedupEntry &entry : classes) {
      if (strategies_equivalent(entry.kept, spec, samples, tol)) {
        entry.merged.push_back(spec.name);
        merged = true;
        break;
      }
    }
    if (!merged) classes.push_back({spec, {}});
  }
  return classes;
}

inline std::vector<EncodingSpec> dedup_strategies(
    const std::vector<EncodingSpec> &raw, int samples = 16,
    double tol = 1e-9) {
  std::vector<EncodingSpec> kept;
  for (auto &entry : dedup_strategies_detailed(raw, samples, tol)) {
    kept.push_back(std::move(entry.kept));
  }
  return kept;
}

}  // namespace vqcbench
