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

#include "gqtsp/oracle/clc.hpp"

#include <cmath>
#include <string>

#include "gqtsp/synth/controlled_phase.hpp"
#include "gqtsp/synth/fourier.hpp"

namespace gqtsp::oracle {

using sim::CircuitError;
using sim::Gate;

namespace {

void check_cycle(const tsp::NormalizedPhases& phases, std::span<const Qubit> cycle) {
  if (phases.m == 0 || cycle.size() != phases.m * phases.cities) {
    throw CircuitError("cycle register has " + std::to_string(cycle.size()) +
                       " qubits, expected " + std::to_string(phases.m * phases.cities));
  }
}

std::span<const Qubit> city_slice(std::span<const Qubit> cycle, std::size_t j,
                                  std::size_t m) {
  return cycle.subspan(j * m, m);
}

}  // namespace

void ClcConfig::validate() const {
  if (phases.t == 0 || phases.t > 30) throw CircuitError("precision t out of range");
  if (threshold >= (std::uint64_t{1} << phases.t)) {
    throw CircuitError("threshold " + std::to_string(threshold) + " does not fit in " +
                       std::to_string(phases.t) + " bits");
  }
}

void build_cost_phase(Circuit& c, std::span<const Qubit> cycle,
                      const tsp::NormalizedPhases& phases) {
  check_cycle(phases, cycle);
  for (std::size_t j = 0; j < phases.cities; ++j) {
    c.append(Gate::diagonal(city_slice(cycle, j, phases.m), phases.tables[j].angles));
  }
}

void build_qpe(Circuit& c, std::span<const Qubit> cycle, std::span<const Qubit> precision,
               const tsp::NormalizedPhases& phases) {
  check_cycle(phases, cycle);
  if (precision.empty()) throw CircuitError("empty precision register");
  for (Qubit q : precision) c.append(Gate::h(q));
  for (std::size_t j = 0; j < precision.size(); ++j) {
    const double power = std::ldexp(1.0, static_cast<int>(j));
    for (std::size_t city = 0; city < phases.cities; ++city) {
      synth::controlled_u(c, precision[j], city_slice(cycle, city, phases.m),
                          phases.tables[city].scaled(power));
    }
  }
  synth::iqft(c, precision);
}

void build_clc(Circuit& c, const ClcConfig& config, std::span<const Qubit> cycle,
               Qubit result) {
  config.validate();
  const std::vector<Qubit> precision = c.ledger().allocate("clc.T", config.t());
  const std::size_t start = c.size();
  build_qpe(c, cycle, precision, config.phases);
  const std::size_t qpe_end = c.size();
  synth::compare_const(c, precision, config.threshold, result, config.direction);
  c.append_mirror(start, qpe_end);
  c.ledger().release("clc.T");
}

bool clc_flag(const ClcConfig& config, double phase) {
  const std::uint64_t bucket = config.phases.bucket_of_phase(phase);
  return config.direction == synth::Direction::kGreater ? bucket > config.threshold
                                                        : bucket < config.threshold;
}

}  // namespace gqtsp::oracle
