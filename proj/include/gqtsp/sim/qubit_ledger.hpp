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

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "gqtsp/sim/gate.hpp"

namespace gqtsp::sim {

struct Register {
  std::string name;
  std::vector<Qubit> qubits;  // qubits[0] is the least significant bit

  std::size_t size() const { return qubits.size(); }
};

/// Bookkeeping of named registers and the zeroed-ancilla pool.
///
/// Qubits are never destroyed: releasing a register hands its qubits to the
/// zeroed pool, and later allocations draw from the pool (lowest index first)
/// before growing the address space. `total()` is therefore the peak number
/// of qubits a circuit needs, and always equals the live register sizes plus
/// the pool size.
class QubitLedger {
 public:
  /// Allocates a register and returns its qubits. Fails if the name is
  /// already live.
  std::vector<Qubit> allocate(std::string name, std::size_t size);
  /// Returns a register's qubits to the zeroed pool. The caller guarantees
  /// they are |0> at this point in the circuit.
  void release(std::string_view name);

  /// Grows the zeroed pool by `size` fresh qubits.
  void reserve_pool(std::size_t size);
  /// Takes `count` zeroed qubits from the pool, growing it if needed.
  std::vector<Qubit> borrow_zeroed(std::size_t count);
  /// Hands zeroed qubits back to the pool.
  void return_zeroed(std::span<const Qubit> qubits);

  /// Marks qubits as in use as dirty (borrowed) ancillas. They belong to
  /// some other register and must be restored by the borrower.
  void mark_borrowed(std::span<const Qubit> qubits);
  void unmark_borrowed(std::span<const Qubit> qubits);
  std::span<const Qubit> borrowed() const { return borrowed_; }

  bool contains(std::string_view name) const;
  /// The reference is invalidated by the next allocate/release.
  const Register& operator[](std::string_view name) const;
  const std::vector<Register>& registers() const { return registers_; }

  std::size_t total() const { return total_; }
  std::size_t pool_size() const { return pool_free_.size() + pool_used_.size(); }
  std::size_t pool_free() const { return pool_free_.size(); }

 private:
  Qubit fresh();

  std::vector<Register> registers_;
  std::vector<Qubit> pool_free_;  // kept sorted
  std::vector<Qubit> pool_used_;
  std::vector<Qubit> borrowed_;
  std::size_t total_ = 0;
};

}  // namespace gqtsp::sim
