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

#include "gqtsp/synth/controlled_phase.hpp"

#include <bit>

namespace gqtsp::synth {

using sim::CircuitError;
using sim::Gate;

std::size_t PhaseTable::width() const {
  if (angles.size() < 2 || !std::has_single_bit(angles.size())) {
    throw CircuitError("phase table size must be a power of two >= 2");
  }
  return static_cast<std::size_t>(std::countr_zero(angles.size()));
}

PhaseTable PhaseTable::scaled(double factor) const {
  PhaseTable out{angles};
  for (double& a : out.angles) a = sim::wrap_angle(a * factor);
  return out;
}

void doubly_controlled_phase(Circuit& c, Qubit a, Qubit b, Qubit t, double phi) {
  if (sim::wrap_angle(phi) == 0.0) return;
  c.append(Gate::controlled_phase(b, t, phi / 2));
  c.append(Gate::cnot(a, b));
  c.append(Gate::controlled_phase(b, t, -phi / 2));
  c.append(Gate::cnot(a, b));
  c.append(Gate::controlled_phase(a, t, phi / 2));
}

namespace {

void phase_if_nonzero(Circuit& c, Qubit q, double angle) {
  if (sim::wrap_angle(angle) != 0.0) c.append(Gate::phase(q, angle));
}

void cphase_if_nonzero(Circuit& c, Qubit a, Qubit b, double angle) {
  if (sim::wrap_angle(angle) != 0.0) c.append(Gate::controlled_phase(a, b, angle));
}

void build(Circuit& c, Qubit control, std::span<const Qubit> reg,
           std::span<const double> theta) {
  const std::size_t m = reg.size();
  if (m == 1) {
    phase_if_nonzero(c, control, theta[0]);
    cphase_if_nonzero(c, control, reg[0], theta[1] - theta[0]);
    return;
  }
  if (m == 2) {
    phase_if_nonzero(c, control, theta[0]);
    cphase_if_nonzero(c, control, reg[0], theta[1] - theta[0]);
    cphase_if_nonzero(c, control, reg[1], theta[2] - theta[0]);
    doubly_controlled_phase(c, control, reg[0], reg[1],
                            theta[3] - theta[2] - theta[1] + theta[0]);
    return;
  }
  const std::size_t half = theta.size() / 2;
  const auto lower = theta.first(half);
  const auto upper = theta.subspan(half);
  std::vector<double> diff(half);
  bool any = false;
  for (std::size_t k = 0; k < half; ++k) {
    diff[k] = upper[k] - lower[k];
    any = any || sim::wrap_angle(diff[k]) != 0.0;
  }
  const auto low = reg.first(m - 1);
  if (any) {
    const Qubit anc = c.ledger().borrow_zeroed(1)[0];
    c.append(Gate::toffoli(control, reg[m - 1], anc));
    build(c, anc, low, diff);
    c.append(Gate::toffoli(control, reg[m - 1], anc));
    const Qubit returned[] = {anc};
    c.ledger().return_zeroed(returned);
  }
  build(c, control, low, lower);
}

}  // namespace

void controlled_u(Circuit& c, Qubit control, std::span<const Qubit> reg,
                  const PhaseTable& phases) {
  if (reg.empty() || phases.width() != reg.size()) {
    throw CircuitError("phase table size must be 2^(register width)");
  }
  build(c, control, reg, phases.angles);
}

}  // namespace gqtsp::synth
