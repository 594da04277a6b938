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

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "gqtsp/sim/gate.hpp"
#include "gqtsp/sim/qubit_ledger.hpp"

namespace gqtsp::sim {

struct GateCounts {
  std::array<std::size_t, 7> by_kind{};  // indexed by GateKind
  std::size_t total = 0;
  /// Toffolis plus 4(k-2) for every primitive C^kNOT with k >= 3, i.e. the
  /// cost of that gate after borrowed-ancilla decomposition.
  std::size_t toffoli_equivalents = 0;

  std::size_t operator[](GateKind k) const {
    return by_kind[static_cast<std::size_t>(k)];
  }
};

/// Ordered gate list over the qubits of its ledger.
class Circuit {
 public:
  explicit Circuit(std::string name = {}) : name_(std::move(name)) {}

  const std::string& name() const { return name_; }
  QubitLedger& ledger() { return ledger_; }
  const QubitLedger& ledger() const { return ledger_; }

  /// Appends a gate. Every qubit must already be allocated in the ledger.
  void append(Gate gate);
  /// Appends another circuit's gates; its qubit indices are taken as-is.
  void append(const Circuit& other);

  /// Appends the inverse of another circuit (its gates reversed and
  /// inverted); its qubit indices are taken as-is.
  void append_inverse(const Circuit& other);

  /// Appends the inverses of gates [from, to) in reverse order.
  void append_mirror(std::size_t from, std::size_t to);
  void append_mirror(std::size_t from) { append_mirror(from, size()); }

  /// The mirror circuit: reversed order, each gate inverted, same ledger.
  Circuit inverse() const;

  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }
  const std::vector<Gate>& gates() const { return gates_; }

  GateCounts counts() const;
  /// ASAP layer count over all primitive gates.
  std::size_t depth() const;
  /// Layer count where only Toffoli-family gates add depth; a primitive
  /// C^kNOT with k >= 3 adds 4(k-2) layers.
  std::size_t toffoli_depth() const;

 private:
  std::string name_;
  QubitLedger ledger_;
  std::vector<Gate> gates_;
};

}  // namespace gqtsp::sim
