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

#include "gqtsp/sim/state_vector.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <random>

#include "bits.hpp"

namespace gqtsp::sim {

namespace {

using detail::deposit;
using detail::mask_of;

constexpr std::size_t kDefaultMaxQubits = 28;
constexpr std::size_t kHardMaxQubits = 40;

void check_qubits(const StateVector& s, const Gate& g) {
  if (g.max_qubit() >= s.qubit_count()) {
    throw CircuitError("gate qubit " + std::to_string(g.max_qubit()) +
                       " out of range for a " +
                       std::to_string(s.qubit_count()) + "-qubit state");
  }
}

// Swaps amplitude pairs that differ in `target` with every control set.
void apply_x(std::span<Amplitude> a, std::size_t n, std::uint64_t control_mask,
             std::uint64_t target_bit) {
  const std::uint64_t used = control_mask | target_bit;
  const std::uint64_t free = ((std::uint64_t{1} << n) - 1) & ~used;
  const std::uint64_t count = std::uint64_t{1} << std::popcount(free);
  for (std::uint64_t i = 0; i < count; ++i) {
    const std::uint64_t base = deposit(i, free) | control_mask;
    std::swap(a[base], a[base | target_bit]);
  }
}

void apply_h(std::span<Amplitude> a, std::size_t n, std::uint64_t target_bit) {
  const double r = 1.0 / std::sqrt(2.0);
  // For low targets a plain blocked loop vectorizes better than pdep.
  const std::uint64_t dim = std::uint64_t{1} << n;
  for (std::uint64_t block = 0; block < dim; block += 2 * target_bit) {
    for (std::uint64_t j = block; j < block + target_bit; ++j) {
      const Amplitude x = a[j];
      const Amplitude y = a[j + target_bit];
      a[j] = (x + y) * r;
      a[j + target_bit] = (x - y) * r;
    }
  }
}

// Multiplies amplitudes whose `set_mask` bits are all one by `factor`.
void apply_phase(std::span<Amplitude> a, std::size_t n, std::uint64_t set_mask,
                 Amplitude factor) {
  const std::uint64_t free = ((std::uint64_t{1} << n) - 1) & ~set_mask;
  const std::uint64_t count = std::uint64_t{1} << std::popcount(free);
  for (std::uint64_t i = 0; i < count; ++i) {
    a[deposit(i, free) | set_mask] *= factor;
  }
}

void apply_diagonal(std::span<Amplitude> a, const Gate& g) {
  const detail::RegisterReader reader(g.qubits());
  const auto angles = g.angles();
  std::vector<Amplitude> factors(angles.size());
  for (std::size_t k = 0; k < angles.size(); ++k) {
    factors[k] = std::polar(1.0, angles[k]);
  }
  for (std::uint64_t i = 0; i < a.size(); ++i) a[i] *= factors[reader(i)];
}

std::uint64_t bit(Qubit q) { return std::uint64_t{1} << q; }

}  // namespace

StateVector::StateVector(std::size_t qubit_count) : qubit_count_(qubit_count) {
  if (qubit_count == 0) throw CircuitError("state needs at least one qubit");
  if (qubit_count > max_qubits()) {
    throw ResourceError("state of " + std::to_string(qubit_count) +
                        " qubits exceeds the memory bound of " +
                        std::to_string(max_qubits()) + " qubits");
  }
  amps_.assign(std::size_t{1} << qubit_count, Amplitude{0.0, 0.0});
  amps_[0] = 1.0;
}

std::size_t StateVector::max_qubits() {
  if (const char* env = std::getenv("GQTSP_MAX_QUBITS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && v > 0) return std::min<std::size_t>(v, kHardMaxQubits);
  }
  return kDefaultMaxQubits;
}

void StateVector::set_basis_state(std::uint64_t index) {
  if (index >= amps_.size()) throw CircuitError("basis index out of range");
  std::fill(amps_.begin(), amps_.end(), Amplitude{0.0, 0.0});
  amps_[index] = 1.0;
}

double StateVector::norm_squared() const {
  double s = 0.0;
  for (const Amplitude& x : amps_) s += std::norm(x);
  return s;
}

std::vector<Amplitude>& StateVector::scratch() {
  if (scratch_.size() != amps_.size()) scratch_.assign(amps_.size(), 0.0);
  return scratch_;
}

void StateVector::apply(const Gate& g) {
  check_qubits(*this, g);
  const std::size_t n = qubit_count_;
  switch (g.kind()) {
    case GateKind::kX:
    case GateKind::kToffoli:
    case GateKind::kMultiControlledX:
      apply_x(amps_, n, mask_of(g.controls()), bit(g.target()));
      break;
    case GateKind::kH:
      apply_h(amps_, n, bit(g.target()));
      break;
    case GateKind::kPhase:
    case GateKind::kControlledPhase:
      if (g.angle() != 0.0) {
        apply_phase(amps_, n, mask_of(g.qubits()), std::polar(1.0, g.angle()));
      }
      break;
    case GateKind::kDiagonalPhase:
      apply_diagonal(amps_, g);
      break;
  }
}

void StateVector::apply(const Circuit& circuit) {
  if (circuit.ledger().total() > qubit_count_) {
    throw CircuitError("circuit '" + circuit.name() + "' needs " +
                       std::to_string(circuit.ledger().total()) +
                       " qubits, state has " + std::to_string(qubit_count_));
  }
  for (const Gate& g : circuit.gates()) apply(g);
}

StateVector new_state(std::size_t qubit_count) { return StateVector(qubit_count); }
void apply_gate(StateVector& state, const Gate& gate) { state.apply(gate); }
void apply_circuit(StateVector& state, const Circuit& circuit) {
  state.apply(circuit);
}

double register_probability(const StateVector& state,
                            std::span<const Qubit> qubits, std::uint64_t value) {
  if (qubits.empty()) throw CircuitError("empty qubit list");
  for (Qubit q : qubits) {
    if (q >= state.qubit_count()) throw CircuitError("qubit out of range");
  }
  if (qubits.size() < 64 && value >= (std::uint64_t{1} << qubits.size())) {
    throw CircuitError("register value out of range");
  }
  const detail::RegisterReader reader(qubits);
  const std::uint64_t placed = reader.place(value);
  const std::uint64_t n = state.qubit_count();
  const std::uint64_t free = ((std::uint64_t{1} << n) - 1) & ~reader.mask();
  const std::uint64_t count = std::uint64_t{1} << std::popcount(free);
  const auto a = state.amplitudes();
  double p = 0.0;
  for (std::uint64_t i = 0; i < count; ++i) p += std::norm(a[deposit(i, free) | placed]);
  return p;
}

double basis_probability(const StateVector& state, const QubitLedger& ledger,
                         std::string_view register_name, std::uint64_t value) {
  const std::vector<Qubit> qubits = ledger[register_name].qubits;
  return register_probability(state, qubits, value);
}

std::vector<double> register_distribution(const StateVector& state,
                                          std::span<const Qubit> qubits) {
  if (qubits.empty()) throw CircuitError("empty qubit list");
  if (qubits.size() > 26) throw ResourceError("marginal over too many qubits");
  for (Qubit q : qubits) {
    if (q >= state.qubit_count()) throw CircuitError("qubit out of range");
  }
  const detail::RegisterReader reader(qubits);
  std::vector<double> dist(std::size_t{1} << qubits.size(), 0.0);
  const auto a = state.amplitudes();
  for (std::uint64_t i = 0; i < a.size(); ++i) dist[reader(i)] += std::norm(a[i]);
  return dist;
}

std::string to_bitstring(std::uint64_t value, std::size_t width) {
  std::string s(width, '0');
  for (std::size_t i = 0; i < width; ++i) {
    if ((value >> i) & 1U) s[width - 1 - i] = '1';
  }
  return s;
}

std::map<std::string, std::size_t> sample(const StateVector& state,
                                          std::size_t shots,
                                          std::span<const Qubit> qubits,
                                          std::uint64_t seed) {
  if (shots == 0) throw CircuitError("shots must be positive");
  const std::vector<double> dist = register_distribution(state, qubits);
  std::vector<double> cumulative(dist.size());
  double acc = 0.0;
  for (std::size_t v = 0; v < dist.size(); ++v) {
    acc += dist[v];
    cumulative[v] = acc;
  }
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> hits(dist.size(), 0);
  for (std::size_t s = 0; s < shots; ++s) {
    // 53 random bits scaled to [0, total) so the result does not depend on
    // the standard library's distribution implementation.
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * acc;
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    std::size_t v = static_cast<std::size_t>(it - cumulative.begin());
    if (v >= dist.size()) v = dist.size() - 1;
    while (dist[v] == 0.0 && v > 0) --v;  // never report a zero-probability value
    ++hits[v];
  }
  std::map<std::string, std::size_t> counts;
  for (std::size_t v = 0; v < hits.size(); ++v) {
    if (hits[v] != 0) counts[to_bitstring(v, qubits.size())] = hits[v];
  }
  return counts;
}

}  // namespace gqtsp::sim
