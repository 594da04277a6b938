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
#include <span>
#include <vector>

#if defined(__BMI2__)
#include <immintrin.h>
#endif

#include "gqtsp/sim/gate.hpp"

namespace gqtsp::sim::detail {

/// Scatters the low bits of `value` into the set bits of `mask`.
inline std::uint64_t deposit(std::uint64_t value, std::uint64_t mask) {
#if defined(__BMI2__)
  return _pdep_u64(value, mask);
#else
  std::uint64_t out = 0;
  for (std::uint64_t bit = 1; mask != 0; bit <<= 1) {
    const std::uint64_t low = mask & (~mask + 1);
    if (value & bit) out |= low;
    mask ^= low;
  }
  return out;
#endif
}

/// Gathers the bits of `value` selected by `mask` into the low bits.
inline std::uint64_t extract(std::uint64_t value, std::uint64_t mask) {
#if defined(__BMI2__)
  return _pext_u64(value, mask);
#else
  std::uint64_t out = 0;
  for (std::uint64_t bit = 1; mask != 0; bit <<= 1) {
    const std::uint64_t low = mask & (~mask + 1);
    if (value & low) out |= bit;
    mask ^= low;
  }
  return out;
#endif
}

inline std::uint64_t mask_of(std::span<const Qubit> qubits) {
  std::uint64_t m = 0;
  for (Qubit q : qubits) m |= std::uint64_t{1} << q;
  return m;
}

/// Reads an ordered register (qubits[0] least significant) out of a basis
/// index. Uses one pext plus a lookup when the order is not ascending.
class RegisterReader {
 public:
  explicit RegisterReader(std::span<const Qubit> qubits)
      : mask_(mask_of(qubits)) {
    bool ascending = true;
    for (std::size_t i = 1; i < qubits.size(); ++i) {
      if (qubits[i] < qubits[i - 1]) ascending = false;
    }
    if (ascending) return;
    // position of each qubit inside the pext result
    std::vector<unsigned> rank(qubits.size());
    for (std::size_t i = 0; i < qubits.size(); ++i) {
      unsigned r = 0;
      for (Qubit other : qubits) r += other < qubits[i] ? 1 : 0;
      rank[i] = r;
    }
    lut_.resize(std::size_t{1} << qubits.size());
    for (std::uint64_t packed = 0; packed < lut_.size(); ++packed) {
      std::uint64_t v = 0;
      for (std::size_t i = 0; i < qubits.size(); ++i) {
        if ((packed >> rank[i]) & 1U) v |= std::uint64_t{1} << i;
      }
      lut_[packed] = v;
    }
  }

  std::uint64_t operator()(std::uint64_t index) const {
    const std::uint64_t packed = extract(index, mask_);
    return lut_.empty() ? packed : lut_[packed];
  }

  /// Basis-index bits that put `value` on the register.
  std::uint64_t place(std::uint64_t value) const {
    if (lut_.empty()) return deposit(value, mask_);
    for (std::uint64_t packed = 0; packed < lut_.size(); ++packed) {
      if (lut_[packed] == value) return deposit(packed, mask_);
    }
    return 0;
  }

  std::uint64_t mask() const { return mask_; }

 private:
  std::uint64_t mask_;
  std::vector<std::uint64_t> lut_;
};

}  // namespace gqtsp::sim::detail
