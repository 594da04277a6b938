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

#include "gqtsp/sim/circuit.hpp"

namespace gqtsp::sim {

/// Image of one basis state under a circuit with no Hadamards.
struct TraceResult {
  std::uint64_t basis = 0;
  double phase = 0.0;  // accumulated, wrapped into [0, 2pi)
};

/// Boolean propagation of basis states through a circuit of X, Toffoli, MCX
/// and diagonal gates, without a statevector. Limited to 64 qubits.
class ClassicalTrace {
 public:
  /// Throws CircuitError if the circuit contains a Hadamard or uses more
  /// than 64 qubits.
  explicit ClassicalTrace(const Circuit& circuit);

  TraceResult run(std::uint64_t basis) const;
  /// Basis image only; phases are skipped.
  std::uint64_t permute(std::uint64_t basis) const;

 private:
  struct Op {
    std::uint64_t controls;  // all must be set
    std::uint64_t target;    // flipped bit, or 0 for phase ops
    double angle;            // phase for kPhase/kControlledPhase
    std::int32_t diagonal;   // index into diagonals_, or -1
  };
  std::vector<Op> ops_;
  std::vector<Gate> diagonals_;
};

}  // namespace gqtsp::sim
