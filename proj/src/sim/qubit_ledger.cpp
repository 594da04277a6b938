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

#include "gqtsp/sim/qubit_ledger.hpp"

#include <algorithm>

namespace gqtsp::sim {

Qubit QubitLedger::fresh() { return static_cast<Qubit>(total_++); }

std::vector<Qubit> QubitLedger::allocate(std::string name, std::size_t size) {
  if (contains(name)) {
    throw CircuitError("register '" + name + "' is already allocated");
  }
  Register reg{std::move(name), {}};
  reg.qubits.reserve(size);
  while (reg.qubits.size() < size && !pool_free_.empty()) {
    reg.qubits.push_back(pool_free_.front());
    pool_free_.erase(pool_free_.begin());
  }
  while (reg.qubits.size() < size) reg.qubits.push_back(fresh());
  std::vector<Qubit> qubits = reg.qubits;
  registers_.push_back(std::move(reg));
  return qubits;
}

void QubitLedger::release(std::string_view name) {
  auto it = std::find_if(registers_.begin(), registers_.end(),
                         [&](const Register& r) { return r.name == name; });
  if (it == registers_.end()) {
    throw CircuitError("unknown register '" + std::string(name) + "'");
  }
  pool_free_.insert(pool_free_.end(), it->qubits.begin(), it->qubits.end());
  std::sort(pool_free_.begin(), pool_free_.end());
  registers_.erase(it);
}

void QubitLedger::reserve_pool(std::size_t size) {
  for (std::size_t i = 0; i < size; ++i) pool_free_.push_back(fresh());
  std::sort(pool_free_.begin(), pool_free_.end());
}

std::vector<Qubit> QubitLedger::borrow_zeroed(std::size_t count) {
  if (pool_free_.size() < count) reserve_pool(count - pool_free_.size());
  std::vector<Qubit> out(pool_free_.begin(), pool_free_.begin() + count);
  pool_free_.erase(pool_free_.begin(), pool_free_.begin() + count);
  pool_used_.insert(pool_used_.end(), out.begin(), out.end());
  return out;
}

void QubitLedger::return_zeroed(std::span<const Qubit> qubits) {
  for (Qubit q : qubits) {
    auto it = std::find(pool_used_.begin(), pool_used_.end(), q);
    if (it == pool_used_.end()) {
      throw CircuitError("returned qubit was not borrowed from the pool");
    }
    pool_used_.erase(it);
    pool_free_.push_back(q);
  }
  std::sort(pool_free_.begin(), pool_free_.end());
}

void QubitLedger::mark_borrowed(std::span<const Qubit> qubits) {
  for (Qubit q : qubits) {
    if (q >= total_) throw CircuitError("borrowed qubit is not allocated");
    if (std::find(borrowed_.begin(), borrowed_.end(), q) != borrowed_.end()) {
      throw CircuitError("qubit is already borrowed");
    }
    borrowed_.push_back(q);
  }
}

void QubitLedger::unmark_borrowed(std::span<const Qubit> qubits) {
  for (Qubit q : qubits) {
    std::erase(borrowed_, q);
  }
}

bool QubitLedger::contains(std::string_view name) const {
  return std::any_of(registers_.begin(), registers_.end(),
                     [&](const Register& r) { return r.name == name; });
}

const Register& QubitLedger::operator[](std::string_view name) const {
  for (const Register& r : registers_) {
    if (r.name == name) return r;
  }
  throw CircuitError("unknown register '" + std::string(name) + "'");
}

}  // namespace gqtsp::sim
