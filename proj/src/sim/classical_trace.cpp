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

#include "gqtsp/sim/classical_trace.hpp"

#include "bits.hpp"

namespace gqtsp::sim {

ClassicalTrace::ClassicalTrace(const Circuit& circuit) {
  if (circuit.ledger().total() > 64) {
    throw CircuitError("classical trace supports at most 64 qubits");
  }
  ops_.reserve(circuit.size());
  for (const Gate& g : circuit.gates()) {
    switch (g.kind()) {
      case GateKind::kH:
        throw CircuitError("classical trace cannot propagate a Hadamard");
      case GateKind::kX:
      case GateKind::kToffoli:
      case GateKind::kMultiControlledX:
        ops_.push_back({detail::mask_of(g.controls()),
                        std::uint64_t{1} << g.target(), 0.0, -1});
        break;
      case GateKind::kPhase:
      case GateKind::kControlledPhase:
        ops_.push_back({detail::mask_of(g.qubits()), 0, g.angle(), -1});
        break;
      case GateKind::kDiagonalPhase:
        ops_.push_back({0, 0, 0.0, static_cast<std::int32_t>(diagonals_.size())});
        diagonals_.push_back(g);
        break;
    }
  }
}

std::uint64_t ClassicalTrace::permute(std::uint64_t basis) const {
  for (const Op& op : ops_) {
    if (op.target != 0 && (basis & op.controls) == op.controls) basis ^= op.target;
  }
  return basis;
}

TraceResult ClassicalTrace::run(std::uint64_t basis) const {
  double phase = 0.0;
  for (const Op& op : ops_) {
    if (op.diagonal >= 0) {
      const Gate& g = diagonals_[static_cast<std::size_t>(op.diagonal)];
      std::uint64_t k = 0;
      const auto qs = g.qubits();
      for (std::size_t i = 0; i < qs.size(); ++i) {
        k |= ((basis >> qs[i]) & 1U) << i;
      }
      phase += g.angles()[k];
    } else if ((basis & op.controls) == op.controls) {
      if (op.target != 0) {
        basis ^= op.target;
      } else {
        phase += op.angle;
      }
    }
  }
  return {basis, wrap_angle(phase)};
}

}  // namespace gqtsp::sim
