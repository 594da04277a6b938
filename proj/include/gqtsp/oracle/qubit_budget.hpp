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

namespace gqtsp::oracle {

enum class ChoiceEncoding {
  /// m = ceil(log2 d) bits index into the neighbour list.
  kSparse,
  /// m = ceil(log2 N) bits hold the next city directly.
  kDense,
};

std::size_t choice_width(std::size_t cities, ChoiceEncoding encoding, std::size_t degree);

/// Published qubit accounting of the optimized algorithm. The HCD set
/// (locations, checks, scratch) and the CLC set share one zeroed pool, so
/// only the larger of the two counts.
struct QubitBudget {
  std::size_t cities = 0;
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t t = 0;
  std::size_t k = 0;
  std::size_t anchors = 0;

  std::size_t cycle_qubits = 0;     // mN
  std::size_t location_qubits = 0;  // n(k + L)
  std::size_t check_qubits = 0;     // sigma0(N) - 1
  std::size_t scratch_qubits = 0;   // m, the forwarder's choice register
  std::size_t result_qubits = 2;    // R_HCD and R_CLC
  std::size_t clc_qubits = 0;       // 2t + 1
  std::size_t wide_choice_qubits = 0;  // max(0, m - 2), controlled U for m > 2

  std::size_t hcd_set() const { return location_qubits + check_qubits + scratch_qubits; }
  std::size_t total() const;
};

QubitBudget optimized_budget(std::size_t cities, std::size_t m, std::size_t t = 6);

/// No anchors, an OR check at every step and no pool sharing:
/// mN + nN + (N-1) + (2t+1) + m + 2.
std::size_t nonoptimized_total(std::size_t cities, std::size_t m, std::size_t t = 6);

/// mN + 2 sqrt(N) log2 N + sigma0(N), the leading terms of the asymptotic
/// qubit count.
double asymptotic_estimate(std::size_t cities, std::size_t m);

}  // namespace gqtsp::oracle
