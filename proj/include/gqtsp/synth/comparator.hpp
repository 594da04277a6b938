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

namespace gqtsp::synth {

using sim::Circuit;
using sim::Qubit;

enum class Direction { kLess, kGreater };

/// result ^= [value(reg) < threshold] or [value(reg) > threshold].
///
/// Adds the classical constant 2^t - c to the register in a carry-only
/// ripple chain and reads the final carry, which is [value >= c]; the
/// carries live in zeroed ancillas from the circuit's pool and are
/// uncomputed. Requires 0 <= threshold < 2^t.
void compare_const(Circuit& circuit, std::span<const Qubit> reg,
                   std::uint64_t threshold, Qubit result, Direction direction);

}  // namespace gqtsp::synth
