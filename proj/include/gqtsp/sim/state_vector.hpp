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

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gqtsp/sim/circuit.hpp"
#include "gqtsp/sim/gate.hpp"
#include "gqtsp/sim/qubit_ledger.hpp"

namespace gqtsp::sim {

using Amplitude = std::complex<double>;

/// Dense statevector over a fixed number of qubits. Basis index bit q is the
/// value of qubit q.
///
/// The memory bound defaults to 28 qubits (4 GiB of amplitudes) and can be
/// overridden with the GQTSP_MAX_QUBITS environment variable.
class StateVector {
 public:
  /// |0...0> on `qubit_count` qubits. Throws ResourceError above the bound.
  explicit StateVector(std::size_t qubit_count);

  static std::size_t max_qubits();

  std::size_t qubit_count() const { return qubit_count_; }
  std::uint64_t dimension() const { return amps_.size(); }
  std::span<const Amplitude> amplitudes() const { return amps_; }
  std::span<Amplitude> mutable_amplitudes() { return amps_; }
  Amplitude operator[](std::uint64_t index) const { return amps_[index]; }

  void set_basis_state(std::uint64_t index);
  double norm_squared() const;

  void apply(const Gate& gate);
  void apply(const Circuit& circuit);

  /// Reusable buffer of the same dimension, for out-of-place kernels.
  std::vector<Amplitude>& scratch();
  /// Makes the scratch buffer the live amplitudes (after an out-of-place
  /// kernel filled it).
  void swap_scratch() { amps_.swap(scratch_); }

 private:
  std::size_t qubit_count_;
  std::vector<Amplitude> amps_;
  std::vector<Amplitude> scratch_;
};

StateVector new_state(std::size_t qubit_count);
void apply_gate(StateVector& state, const Gate& gate);
void apply_circuit(StateVector& state, const Circuit& circuit);

/// Probability that `qubits` (least significant first) read `value`.
double register_probability(const StateVector& state,
                            std::span<const Qubit> qubits, std::uint64_t value);
/// Same, addressing a named register of `ledger`.
double basis_probability(const StateVector& state, const QubitLedger& ledger,
                         std::string_view register_name, std::uint64_t value);
/// Marginal distribution of `qubits`; entry v is the probability of value v.
std::vector<double> register_distribution(const StateVector& state,
                                          std::span<const Qubit> qubits);

/// Samples `shots` measurements of `qubits`. Keys are bitstrings with the
/// most significant qubit (qubits.back()) on the left. Equal seeds give
/// identical counts.
std::map<std::string, std::size_t> sample(const StateVector& state,
                                          std::size_t shots,
                                          std::span<const Qubit> qubits,
                                          std::uint64_t seed);

std::string to_bitstring(std::uint64_t value, std::size_t width);

}  // namespace gqtsp::sim
