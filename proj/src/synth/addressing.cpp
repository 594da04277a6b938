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

#include "gqtsp/synth/addressing.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace gqtsp::synth {

using sim::CircuitError;
using sim::Gate;

namespace {

constexpr std::size_t kMaxAddressBits = 24;

// Walks the Gray order, keeping address line b negated exactly when bit b
// of the current codeword is set, and calls `term(address, lines)` where
// `lines` is all-ones iff the register holds `address`.
void gray_walk(Circuit& c, std::span<const Qubit> address,
               const std::function<void(std::uint64_t)>& term) {
  const std::size_t n = address.size();
  if (n == 0 || n > kMaxAddressBits) throw CircuitError("bad address width");
  const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  std::uint64_t negated = 0;
  for (std::uint64_t code : gray_code(n)) {
    for (std::uint64_t diff = code ^ negated; diff != 0; diff &= diff - 1) {
      c.append(Gate::x(address[static_cast<std::size_t>(std::countr_zero(diff))]));
    }
    negated = code;
    term(~code & mask);
  }
  for (std::uint64_t diff = negated; diff != 0; diff &= diff - 1) {
    c.append(Gate::x(address[static_cast<std::size_t>(std::countr_zero(diff))]));
  }
}

}  // namespace

ClassicalTable::ClassicalTable(std::size_t address_width, std::size_t output_width,
                               std::vector<std::uint64_t> values)
    : address_width_(address_width),
      output_width_(output_width),
      values_(std::move(values)) {
  if (address_width == 0 || address_width > kMaxAddressBits) {
    throw CircuitError("table address width out of range");
  }
  if (output_width == 0 || output_width > 63) {
    throw CircuitError("table output width out of range");
  }
  if (values_.size() > (std::size_t{1} << address_width)) {
    throw CircuitError("table has more entries than addresses");
  }
  for (std::uint64_t v : values_) {
    if (v >> output_width) throw CircuitError("table value exceeds output width");
  }
}

std::uint64_t ClassicalTable::operator[](std::uint64_t address) const {
  return address < values_.size() ? values_[address] : 0;
}

std::vector<std::uint64_t> gray_code(std::size_t bits) {
  std::vector<std::uint64_t> out(std::size_t{1} << bits);
  for (std::uint64_t i = 0; i < out.size(); ++i) out[i] = i ^ (i >> 1);
  return out;
}

std::vector<std::uint64_t> addressing_order(std::size_t address_bits) {
  const std::uint64_t mask = (std::uint64_t{1} << address_bits) - 1;
  std::vector<std::uint64_t> out = gray_code(address_bits);
  for (std::uint64_t& code : out) code = ~code & mask;
  return out;
}

void qaqr(Circuit& c, std::span<const Qubit> address,
          std::span<const std::vector<Qubit>> data, std::span<const Qubit> output) {
  if (data.size() > (std::size_t{1} << address.size())) {
    throw CircuitError("qaqr has more data registers than addresses");
  }
  std::vector<Qubit> all(address.begin(), address.end());
  all.insert(all.end(), output.begin(), output.end());
  for (const auto& reg : data) {
    if (reg.size() != output.size()) throw CircuitError("qaqr register width mismatch");
    all.insert(all.end(), reg.begin(), reg.end());
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw CircuitError("qaqr registers overlap");
  }
  std::vector<Qubit> controls(address.begin(), address.end());
  controls.push_back(0);
  gray_walk(c, address, [&](std::uint64_t a) {
    if (a >= data.size()) return;
    for (std::size_t b = 0; b < output.size(); ++b) {
      controls.back() = data[a][b];
      c.append(Gate::mcx(controls, output[b]));
    }
  });
}

void qacr(Circuit& c, std::span<const Qubit> address, const ClassicalTable& table,
          std::span<const Qubit> output) {
  if (table.address_width() != address.size() ||
      table.output_width() != output.size()) {
    throw CircuitError("qacr table shape does not match the registers");
  }
  gray_walk(c, address, [&](std::uint64_t a) {
    const std::uint64_t value = table[a];
    for (std::size_t b = 0; b < output.size(); ++b) {
      if ((value >> b) & 1U) c.append(Gate::mcx(address, output[b]));
    }
  });
}

}  // namespace gqtsp::synth
