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

#include "gqtsp/synth/diffusion.hpp"

#include <numbers>

namespace gqtsp::synth {

using sim::Gate;

void diffusion(Circuit& c, std::span<const Qubit> reg) {
  if (reg.empty()) return;
  const Qubit last = reg.back();
  const auto rest = reg.first(reg.size() - 1);
  for (Qubit q : reg) c.append(Gate::h(q));
  for (Qubit q : reg) c.append(Gate::x(q));
  if (rest.empty()) {
    c.append(Gate::phase(last, std::numbers::pi));
  } else {
    c.append(Gate::h(last));
    c.append(Gate::mcx(rest, last));
    c.append(Gate::h(last));
  }
  for (Qubit q : reg) c.append(Gate::x(q));
  for (Qubit q : reg) c.append(Gate::h(q));
  const Qubit q0 = reg.front();
  c.append(Gate::phase(q0, std::numbers::pi));
  c.append(Gate::x(q0));
  c.append(Gate::phase(q0, std::numbers::pi));
  c.append(Gate::x(q0));
}

}  // namespace gqtsp::synth
