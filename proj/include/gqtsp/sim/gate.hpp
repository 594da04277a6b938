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
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gqtsp::sim {

/// Global qubit index. Qubit 0 is the least significant bit of a basis index.
using Qubit = std::uint32_t;

/// Thrown when a request would exceed the simulator's memory bound.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown for malformed gates, out-of-range qubits and ledger misuse.
class CircuitError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class GateKind : std::uint8_t {
  kX,
  kH,
  kPhase,
  kControlledPhase,
  kToffoli,
  kMultiControlledX,
  kDiagonalPhase,
};

std::string_view to_string(GateKind kind);
GateKind gate_kind_from_string(std::string_view name);

/// Wraps an angle into [0, 2pi).
double wrap_angle(double radians);

/// A primitive gate. Qubit layout by kind:
///   X, H, Phase          qubits = {target}
///   ControlledPhase      qubits = {control, target}
///   Toffoli, MCX         qubits = {controls..., target}
///   DiagonalPhase        qubits = register, least significant first;
///                        basis value k of the register gets phase angles[k]
class Gate {
 public:
  static Gate x(Qubit target);
  static Gate h(Qubit target);
  static Gate phase(Qubit target, double angle);
  static Gate controlled_phase(Qubit control, Qubit target, double angle);
  static Gate toffoli(Qubit c0, Qubit c1, Qubit target);
  /// Controlled NOT with any number of controls. Zero controls is a plain X
  /// and two controls a Toffoli; both are normalized to those kinds.
  static Gate mcx(std::span<const Qubit> controls, Qubit target);
  static Gate cnot(Qubit control, Qubit target);
  static Gate diagonal(std::span<const Qubit> reg, std::vector<double> angles);

  GateKind kind() const { return kind_; }
  std::span<const Qubit> qubits() const { return qubits_; }
  /// Controls of X/Toffoli/MCX and the control of ControlledPhase.
  std::span<const Qubit> controls() const;
  Qubit target() const { return qubits_.back(); }
  double angle() const { return angle_; }
  std::span<const double> angles() const;

  Gate inverse() const;
  bool is_classical() const;
  bool is_diagonal() const;
  Qubit max_qubit() const;

  friend bool operator==(const Gate& a, const Gate& b);

 private:
  Gate(GateKind kind, std::vector<Qubit> qubits, double angle = 0.0,
       std::shared_ptr<const std::vector<double>> table = nullptr);

  GateKind kind_;
  std::vector<Qubit> qubits_;
  double angle_ = 0.0;
  std::shared_ptr<const std::vector<double>> table_;
};

}  // namespace gqtsp::sim
