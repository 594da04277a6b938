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

#include "gqtsp/synth/mcx.hpp"

#include <algorithm>
#include <vector>

namespace gqtsp::synth {

using sim::CircuitError;
using sim::Gate;

namespace {

// The half of the borrowed-ancilla chain that ends on a_{n-2}. With
// controls x[0..n) and ancillas a[0..n-2), ancilla a[i] collects
// x[0] & ... & x[i+1] (xor its old value).
void ladder(Circuit& c, std::span<const Qubit> x, std::span<const Qubit> a) {
  const std::size_t n = x.size();
  for (std::size_t i = n - 2; i >= 2; --i) c.append(Gate::toffoli(x[i], a[i - 2], a[i - 1]));
  c.append(Gate::toffoli(x[0], x[1], a[0]));
  for (std::size_t i = 2; i <= n - 2; ++i) c.append(Gate::toffoli(x[i], a[i - 2], a[i - 1]));
}

}  // namespace

void mcx_borrowed(Circuit& c, std::span<const Qubit> controls, Qubit target,
                  std::span<const Qubit> borrowed) {
  const std::size_t n = controls.size();
  if (n <= 2) {
    c.append(Gate::mcx(controls, target));
    return;
  }
  if (borrowed.size() < n - 2) {
    throw CircuitError("mcx_borrowed needs " + std::to_string(n - 2) +
                       " borrowed qubits, got " + std::to_string(borrowed.size()));
  }
  const auto a = borrowed.first(n - 2);
  const Qubit last = a[n - 3];
  c.append(Gate::toffoli(controls[n - 1], last, target));
  ladder(c, controls, a);
  c.append(Gate::toffoli(controls[n - 1], last, target));
  ladder(c, controls, a);
}

void mcx_one_zeroed(Circuit& c, std::span<const Qubit> controls, Qubit target,
                    std::span<const Qubit> zeroed_pool) {
  const std::size_t n = controls.size();
  if (n < 3) throw CircuitError("mcx_one_zeroed needs at least 3 controls");
  if (zeroed_pool.empty()) throw CircuitError("mcx_one_zeroed needs a zeroed ancilla");
  const Qubit zeroed = zeroed_pool[0];
  const std::size_t k1 = n / 2 + 1;
  const auto first = controls.first(k1);
  std::vector<Qubit> second(controls.begin() + static_cast<std::ptrdiff_t>(k1),
                            controls.end());
  second.push_back(zeroed);

  // Qubits idle during each step serve as borrowed ancillas.
  std::vector<Qubit> idle_first(controls.begin() + static_cast<std::ptrdiff_t>(k1),
                                controls.end());
  idle_first.push_back(target);
  const std::vector<Qubit> idle_second(first.begin(), first.end());

  for (int rep = 0; rep < 2; ++rep) {
    mcx_borrowed(c, first, zeroed, idle_first);
    mcx_borrowed(c, second, target, idle_second);
  }
}

void or_gate(Circuit& c, std::span<const Qubit> inputs, Qubit result) {
  if (inputs.empty()) return;
  for (Qubit q : inputs) c.append(Gate::x(q));
  c.append(Gate::mcx(inputs, result));
  for (Qubit q : inputs) c.append(Gate::x(q));
  c.append(Gate::x(result));
}

}  // namespace gqtsp::synth
