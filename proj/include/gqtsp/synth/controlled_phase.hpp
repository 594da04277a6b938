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

#include <span>
#include <vector>

#include "gqtsp/sim/circuit.hpp"

namespace gqtsp::synth {

using sim::Circuit;
using sim::Qubit;

/// Phase angles theta[k] for the 2^m basis values k of a register.
struct PhaseTable {
  std::vector<double> angles;

  /// Register width m; throws unless the size is a power of two >= 2.
  std::size_t width() const;
  /// Every angle multiplied by `factor`, wrapped into [0, 2pi).
  PhaseTable scaled(double factor) const;
};

/// Phase e^{i phi} on the |111> component of (a, b, c), without ancillas:
/// CP(phi/2) on (b, c), CNOT a->b, CP(-phi/2) on (b, c), CNOT a->b,
/// CP(phi/2) on (a, c).
void doubly_controlled_phase(Circuit& circuit, Qubit a, Qubit b, Qubit c, double phi);

/// When `control` is |1>, basis value k of `reg` gains phase theta[k]:
///   m = 1: one phase and one controlled phase;
///   m = 2: V1 (single-controlled phases) then V2 (a doubly controlled
///          phase by theta3 - theta2 - theta1 + theta0);
///   m > 2: split on the top qubit through one zeroed ancilla taken from
///          the circuit's pool and returned |0>.
void controlled_u(Circuit& circuit, Qubit control, std::span<const Qubit> reg,
                  const PhaseTable& phases);

}  // namespace gqtsp::synth
