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
#include <optional>
#include <span>
#include <vector>

#include "gqtsp/sim/circuit.hpp"
#include "gqtsp/synth/addressing.hpp"
#include "gqtsp/tsp/graph.hpp"

namespace gqtsp::oracle {

using sim::Circuit;
using sim::Qubit;

/// Index conversion for the forwarder: (current index I, choice S) maps to
/// the next index P_I[S]. Addresses are I + (S << n).
///
/// Out-of-range addresses (I >= N or S >= #P_I) map back to I. A walk that
/// hits an undefined step therefore stays on its current city and fails
/// the final return check whenever that city is not 0, and fails the first
/// check when it is.
struct ForwarderSpec {
  tsp::AdjacencyLists lists;
  std::size_t m = 0;
  std::size_t n = 0;

  std::size_t cities() const { return lists.size(); }
  std::uint64_t next(std::uint64_t index, std::uint64_t choice) const;
  synth::ClassicalTable table() const;
  /// Table for the first step, addressed by S alone with I fixed to 0.
  synth::ClassicalTable first_table() const;
};

ForwarderSpec make_forwarder_spec(const tsp::TspGraph& graph);
ForwarderSpec make_forwarder_spec(tsp::AdjacencyLists lists, std::size_t m);

/// output ^= P_I[C_I] for I = value(current). Borrows m zeroed qubits for S
/// and returns them |0>.
void build_index_forwarder(Circuit& circuit, const ForwarderSpec& spec,
                           std::span<const Qubit> current,
                           std::span<const Qubit> output,
                           std::span<const Qubit> cycle);

/// The forwarder specialised to I = 0: output ^= P_0[C_0].
void build_first_forwarder(Circuit& circuit, const ForwarderSpec& spec,
                           std::span<const Qubit> output,
                           std::span<const Qubit> cycle);

/// argmin over 1 <= k < N of floor(N/(k+1)) + k, smallest k on ties.
std::size_t k_opt(std::size_t cities);

/// k intermediate location registers reused inside each of L anchor blocks.
struct AnchorPlan {
  std::size_t cities = 0;
  std::size_t k = 0;
  std::size_t anchors = 0;  // L = floor(N / (k+1))

  static AnchorPlan optimal(std::size_t cities);
  /// Throws sim::CircuitError unless 1 <= k < N.
  static AnchorPlan with_k(std::size_t cities, std::size_t k);

  std::size_t location_registers() const { return k + anchors; }
  /// Steps left after the last anchor, computed into the intermediates.
  std::size_t remainder() const { return cities - anchors * (k + 1); }
};

enum class HcdVariant { kNaive, kImproved, kAnchored };

/// Qubits held by one HCD build besides the cycle register and R_HCD.
struct HcdFootprint {
  std::size_t location_qubits = 0;
  std::size_t check_qubits = 0;
  std::size_t scratch_qubits = 0;

  std::size_t total() const { return location_qubits + check_qubits + scratch_qubits; }
};

HcdFootprint hcd_footprint(const ForwarderSpec& spec, HcdVariant variant,
                           const std::optional<AnchorPlan>& plan = std::nullopt);

/// result ^= [the word on `cycle` is a Hamiltonian cycle]. Location, check
/// and scratch registers are drawn from the ledger and released |0> at the
/// end, so a later build can reuse them.
///
///   naive:    OR checks on I_1..I_{N-1}, then NOR(I_N);
///   improved: OR checks only at proper divisors of N;
///   anchored: improved checks with location registers reused per `plan`
///             (AnchorPlan::optimal when absent).
void build_hcd(Circuit& circuit, const ForwarderSpec& spec, HcdVariant variant,
               std::span<const Qubit> cycle, Qubit result,
               const std::optional<AnchorPlan>& plan = std::nullopt);

inline void build_hcd_naive(Circuit& c, const ForwarderSpec& spec,
                            std::span<const Qubit> cycle, Qubit result) {
  build_hcd(c, spec, HcdVariant::kNaive, cycle, result);
}
inline void build_hcd_improved(Circuit& c, const ForwarderSpec& spec,
                               std::span<const Qubit> cycle, Qubit result) {
  build_hcd(c, spec, HcdVariant::kImproved, cycle, result);
}
inline void build_hcd_anchored(Circuit& c, const ForwarderSpec& spec,
                               std::span<const Qubit> cycle, Qubit result,
                               const AnchorPlan& plan) {
  build_hcd(c, spec, HcdVariant::kAnchored, cycle, result, plan);
}

}  // namespace gqtsp::oracle
