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

#include <complex>
#include <cstdint>
#include <vector>

#include "gqtsp/sim/circuit.hpp"
#include "gqtsp/sim/state_vector.hpp"

namespace gqtsp::sim {

struct FusionOptions {
  /// Largest union support of a fused block. Tables cost 2^k entries.
  std::size_t max_block_qubits = 20;
  /// Largest Hadamard layer applied in one pass.
  std::size_t max_hadamard_layer = 10;
};

/// A circuit precompiled into fused passes over the statevector.
///
/// Runs of gates without Hadamards form monomial blocks: on the block's
/// support every such run maps basis states to basis states with a phase,
/// so it is stored as a permutation table plus a phase table and applied
/// in one pass. Runs of Hadamards on distinct qubits become one
/// Walsh-Hadamard pass. The result equals gate-by-gate application up to
/// floating-point rounding.
class CompiledCircuit {
 public:
  CompiledCircuit(const Circuit& circuit, FusionOptions options = {});

  void apply(StateVector& state) const;

  std::size_t pass_count() const { return blocks_.size(); }
  std::size_t gate_count() const { return gate_count_; }
  std::size_t qubit_count() const { return qubit_count_; }

 private:
  struct Block {
    enum class Kind { kHadamard, kDiagonal, kMonomial } kind;
    std::uint64_t support = 0;            // global qubit mask
    // Local index j of the output takes the input at basis offset
    // source[j] (support bits only), times phase[j] when phase is present.
    std::vector<std::uint64_t> source;
    std::vector<std::complex<double>> phase;
  };

  void close_block(std::vector<Gate>& pending, std::uint64_t support);

  std::vector<Block> blocks_;
  std::size_t gate_count_ = 0;
  std::size_t qubit_count_ = 0;
};

}  // namespace gqtsp::sim
