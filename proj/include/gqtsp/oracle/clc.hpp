// Copyright 2026 The gqtsp Authors
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

#include <cstdint>
#include <span>

#include "gqtsp/sim/circuit.hpp"
#include "gqtsp/synth/comparator.hpp"
#include "gqtsp/tsp/phases.hpp"

namespace gqtsp::oracle {

using sim::Circuit;
using sim::Qubit;

/// Threshold comparison on the t-bit QPE readout. Readouts are in
/// maximization units: a larger bucket is a shorter tour, so the default
/// direction flags buckets strictly above the threshold.
struct ClcConfig {
  std::uint64_t threshold = 0;
  synth::Direction direction = synth::Direction::kGreater;
  tsp::NormalizedPhases phases;

  std::size_t t() const { return phases.t; }
  /// Throws sim::CircuitError unless t >= 1 and threshold < 2^t.
  void validate() const;
};

/// U|C> = exp(i sum_j theta_{j,C_j}) |C>, one diagonal gate per city.
void build_cost_phase(Circuit& circuit, std::span<const Qubit> cycle,
                      const tsp::NormalizedPhases& phases);

/// Phase estimation of U into `precision` (qubit 0 least significant):
/// Hadamards, controlled U^(2^j) on precision qubit j by angle scaling,
/// then the inverse QFT. `precision` must be |0>.
void build_qpe(Circuit& circuit, std::span<const Qubit> cycle,
               std::span<const Qubit> precision, const tsp::NormalizedPhases& phases);

/// result ^= compare(QPE readout, threshold). The precision register is
/// allocated from the ledger, uncomputed by the mirrored QPE and released.
void build_clc(Circuit& circuit, const ClcConfig& config,
               std::span<const Qubit> cycle, Qubit result);

/// Classical flag that build_clc computes for a word whose phase is an
/// exact t-bit fraction.
bool clc_flag(const ClcConfig& config, double phase);

}  // namespace gqtsp::oracle
