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

#include "gqtsp/sim/circuit.hpp"

namespace gqtsp::synth {

using sim::Circuit;
using sim::Qubit;

/// C^nNOT from Toffolis using n-2 borrowed (dirty) ancillas, which are
/// restored. Emits exactly 4(n-2) Toffolis for n >= 3; n <= 2 emits the
/// primitive gate.
void mcx_borrowed(Circuit& circuit, std::span<const Qubit> controls,
                  Qubit target, std::span<const Qubit> borrowed);

/// C^nNOT with one zeroed ancilla b = zeroed[0], in four steps: toggle b
/// on the first floor(n/2)+1 controls, toggle the target on the rest plus
/// b, then both again. Each step is an mcx_borrowed that borrows from the
/// qubits idle in that step. Requires n >= 3 and a nonempty pool: without
/// an ancilla the gate is an odd permutation and cannot be built from
/// Toffolis acting on fewer than all qubits.
void mcx_one_zeroed(Circuit& circuit, std::span<const Qubit> controls,
                    Qubit target, std::span<const Qubit> zeroed);

/// result ^= OR(inputs). Inputs are restored.
void or_gate(Circuit& circuit, std::span<const Qubit> inputs, Qubit result);

}  // namespace gqtsp::synth
