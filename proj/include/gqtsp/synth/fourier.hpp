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

/// |k> -> 2^{-t/2} sum_j e^{2 pi i k j / 2^t} |j>, with reg[0] least
/// significant. Includes the final bit-reversal swaps (three CNOTs each).
void qft(Circuit& circuit, std::span<const Qubit> reg);
/// Inverse of qft, built as its mirror.
void iqft(Circuit& circuit, std::span<const Qubit> reg);

}  // namespace gqtsp::synth
