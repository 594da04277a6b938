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
#include <optional>
#include <span>
#include <vector>

#include "gqtsp/sim/circuit.hpp"

namespace gqtsp::synth {

using sim::Circuit;
using sim::Qubit;

/// Total function from a-bit addresses to o-bit values.
class ClassicalTable {
 public:
  /// Entries beyond `values.size()` read as 0.
  ClassicalTable(std::size_t address_width, std::size_t output_width,
                 std::vector<std::uint64_t> values);

  std::size_t address_width() const { return address_width_; }
  std::size_t output_width() const { return output_width_; }
  std::uint64_t operator[](std::uint64_t address) const;

 private:
  std::size_t address_width_;
  std::size_t output_width_;
  std::vector<std::uint64_t> values_;
};

/// Binary-reflected Gray code of `bits` bits, starting at 0.
std::vector<std::uint64_t> gray_code(std::size_t bits);

/// Addresses visited by qaqr/qacr, in emission order. Term i selects the
/// address whose zero bits are the set bits of the i-th Gray codeword, so
/// consecutive terms differ in exactly one address bit.
std::vector<std::uint64_t> addressing_order(std::size_t address_bits);

/// output ^= data[address]. `data` may hold fewer than 2^n registers;
/// missing addresses select nothing. Address lines are negated along the
/// Gray order, costing 2^n X gates in total.
void qaqr(Circuit& circuit, std::span<const Qubit> address,
          std::span<const std::vector<Qubit>> data, std::span<const Qubit> output);

/// output ^= table[address].
void qacr(Circuit& circuit, std::span<const Qubit> address,
          const ClassicalTable& table, std::span<const Qubit> output);

}  // namespace gqtsp::synth
