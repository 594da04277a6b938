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

#include "gqtsp/sim/circuit.hpp"

#include <algorithm>

namespace gqtsp::sim {

namespace {

std::size_t toffoli_weight(const Gate& g) {
  if (g.kind() == GateKind::kToffoli) return 1;
  if (g.kind() == GateKind::kMultiControlledX && g.controls().size() >= 3) {
    return 4 * (g.controls().size() - 2);
  }
  return 0;
}

template <typename Weight>
std::size_t layered_depth(const std::vector<Gate>& gates, std::size_t width,
                          Weight weight) {
  std::vector<std::size_t> level(width, 0);
  std::size_t depth = 0;
  for (const Gate& g : gates) {
    std::size_t start = 0;
    for (Qubit q : g.qubits()) start = std::max(start, level[q]);
    const std::size_t end = start + weight(g);
    for (Qubit q : g.qubits()) level[q] = end;
    depth = std::max(depth, end);
  }
  return depth;
}

}  // namespace

void Circuit::append(Gate gate) {
  if (gate.max_qubit() >= ledger_.total()) {
    throw CircuitError("gate " + std::string(to_string(gate.kind())) +
                       " uses qubit " + std::to_string(gate.max_qubit()) +
                       " not allocated in circuit '" + name_ + "'");
  }
  gates_.push_back(std::move(gate));
}

void Circuit::append(const Circuit& other) {
  gates_.reserve(gates_.size() + other.gates_.size());
  for (const Gate& g : other.gates_) append(g);
}

void Circuit::append_inverse(const Circuit& other) {
  gates_.reserve(gates_.size() + other.gates_.size());
  for (auto it = other.gates_.rbegin(); it != other.gates_.rend(); ++it) {
    append(it->inverse());
  }
}

void Circuit::append_mirror(std::size_t from, std::size_t to) {
  if (from > to || to > gates_.size()) {
    throw CircuitError("mirror range out of bounds");
  }
  gates_.reserve(gates_.size() + (to - from));
  for (std::size_t i = to; i > from; --i) {
    gates_.push_back(gates_[i - 1].inverse());
  }
}

Circuit Circuit::inverse() const {
  Circuit out(name_.empty() ? std::string{} : name_ + "^-1");
  out.ledger_ = ledger_;
  out.gates_.reserve(gates_.size());
  for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
    out.gates_.push_back(it->inverse());
  }
  return out;
}

GateCounts Circuit::counts() const {
  GateCounts c;
  for (const Gate& g : gates_) {
    ++c.by_kind[static_cast<std::size_t>(g.kind())];
    c.toffoli_equivalents += toffoli_weight(g);
  }
  c.total = gates_.size();
  return c;
}

std::size_t Circuit::depth() const {
  return layered_depth(gates_, ledger_.total(),
                       [](const Gate&) { return std::size_t{1}; });
}

std::size_t Circuit::toffoli_depth() const {
  return layered_depth(gates_, ledger_.total(), toffoli_weight);
}

}  // namespace gqtsp::sim
