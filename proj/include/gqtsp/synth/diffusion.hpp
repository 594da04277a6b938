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

/// 2|s><s| - I on `reg`, |s> the uniform superposition, with no global
/// phase error: H, X, a multi-controlled Z on |1...1>, X, H, then a -1
/// realized as P(pi) X P(pi) X on reg[0].
void diffusion(Circuit& circuit, std::span<const Qubit> reg);

}  // namespace gqtsp::synth
