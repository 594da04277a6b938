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

#include "gqtsp/synth/comparator.hpp"

#include <optional>
#include <vector>

namespace gqtsp::synth {

using sim::CircuitError;
using sim::Gate;

namespace {

// result ^= [value(reg) >= c] for 1 <= c < 2^t.
void at_least(Circuit& circuit, std::span<const Qubit> reg, std::uint64_t c,
              Qubit result) {
  const std::size_t t = reg.size();
  const std::uint64_t addend = (std::uint64_t{1} << t) - c;
  // The running carry is either the constant 0 or a qubit; a carry equal
  // to an input bit aliases that qubit instead of copying it.
  std::optional<Qubit> carry;
  std::vector<Qubit> ancillas;
  const std::size_t start = circuit.size();
  std::size_t compute_end = start;

  for (std::size_t i = 0; i < t; ++i) {
    const bool bit = (addend >> i) & 1U;
    const bool last = i + 1 == t;
    if (!carry) {
      if (bit) carry = reg[i];  // OR(a_i, 0)
      if (last) {
        compute_end = circuit.size();
        if (carry) circuit.append(Gate::cnot(*carry, result));
      }
      continue;
    }
    Qubit out = result;
    if (!last) {
      out = circuit.ledger().borrow_zeroed(1)[0];
      ancillas.push_back(out);
    } else {
      compute_end = circuit.size();
    }
    if (bit) {
      // out ^= OR(a_i, carry) = NOT(AND(NOT a_i, NOT carry))
      circuit.append(Gate::x(reg[i]));
      circuit.append(Gate::x(*carry));
      circuit.append(Gate::toffoli(reg[i], *carry, out));
      circuit.append(Gate::x(reg[i]));
      circuit.append(Gate::x(*carry));
      circuit.append(Gate::x(out));
    } else {
      circuit.append(Gate::toffoli(reg[i], *carry, out));
    }
    carry = out;
  }
  circuit.append_mirror(start, compute_end);
  circuit.ledger().return_zeroed(ancillas);
}

}  // namespace

void compare_const(Circuit& circuit, std::span<const Qubit> reg,
                   std::uint64_t threshold, Qubit result, Direction direction) {
  const std::size_t t = reg.size();
  if (t == 0 || t > 62) throw CircuitError("comparator register width out of range");
  const std::uint64_t limit = std::uint64_t{1} << t;
  if (threshold >= limit) throw CircuitError("comparator threshold out of range");

  if (direction == Direction::kLess) {
    if (threshold == 0) return;  // never less than 0
    at_least(circuit, reg, threshold, result);
    circuit.append(Gate::x(result));
    return;
  }
  if (threshold + 1 == limit) return;  // nothing exceeds 2^t - 1
  at_least(circuit, reg, threshold + 1, result);
}

}  // namespace gqtsp::synth
