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
#include <vector>

#include "gqtsp/synth/controlled_phase.hpp"
#include "gqtsp/tsp/cycle.hpp"

namespace gqtsp::tsp {

enum class PhaseScaling {
  /// Scale so the largest in-range word phase is 2pi(1 - 2^-t).
  kFitRange,
  /// One unit of shifted cost is exactly 2pi/2^t. Needs integer costs
  /// whose largest in-range word sum is below 2^t; QPE is then exact.
  kIntegerUnits,
};

/// Per-city phase tables for the cost operator. Costs are shifted to
/// M - a (M the largest finite edge cost), so the shortest tour has the
/// largest phase; padding entries k >= #P_j have phase 0.
struct NormalizedPhases {
  std::size_t cities = 0;
  std::size_t m = 0;
  std::size_t t = 0;
  PhaseScaling scaling = PhaseScaling::kFitRange;
  double max_edge_cost = 0.0;      // M
  double radians_per_unit = 0.0;   // phase per unit of shifted cost
  std::vector<synth::PhaseTable> tables;

  /// Sum of theta_{j, C_j}, unwrapped.
  double phase_of(const CycleWord& word) const;
  /// Nearest t-bit QPE readout for a phase.
  std::uint64_t bucket_of_phase(double phase) const;
  /// QPE bucket of a Hamiltonian cycle with the given original cost.
  std::uint64_t quantize(double cost) const;
  /// Original cost at the centre of a bucket.
  double dequantize(std::uint64_t bucket) const;
  /// Width of one bucket in original cost units.
  double bucket_width() const;
};

/// True iff kIntegerUnits applies to this graph at precision t.
bool integer_units_possible(const TspGraph& graph, std::size_t t);

/// Throws GraphError for an invalid graph or an inapplicable scaling.
NormalizedPhases normalize_phases(const TspGraph& graph, std::size_t t,
                                  PhaseScaling scaling = PhaseScaling::kFitRange);

}  // namespace gqtsp::tsp
