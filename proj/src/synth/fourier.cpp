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

#include "gqtsp/synth/fourier.hpp"

#include <cmath>
#include <numbers>

namespace gqtsp::synth {

using sim::Gate;

void qft(Circuit& c, std::span<const Qubit> reg) {
  const std::size_t t = reg.size();
  for (std::size_t i = t; i-- > 0;) {
    c.append(Gate::h(reg[i]));
    for (std::size_t j = i; j-- > 0;) {
      c.append(Gate::controlled_phase(reg[j], reg[i],
                                      std::numbers::pi / std::ldexp(1.0, static_cast<int>(i - j))));
    }
  }
  for (std::size_t i = 0; i < t / 2; ++i) {
    const Qubit a = reg[i];
    const Qubit b = reg[t - 1 - i];
    c.append(Gate::cnot(a, b));
    c.append(Gate::cnot(b, a));
    c.append(Gate::cnot(a, b));
  }
}

void iqft(Circuit& c, std::span<const Qubit> reg) {
  Circuit forward;
  forward.ledger() = c.ledger();
  qft(forward, reg);
  c.append_inverse(forward);
}

}  // namespace gqtsp::synth
