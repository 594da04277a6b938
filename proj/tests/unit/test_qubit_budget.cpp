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

#include <gtest/gtest.h>

#include "gqtsp/oracle/qubit_budget.hpp"

namespace gqtsp::oracle {
namespace {

TEST(QubitBudget, SparseTotals) {
  const std::size_t expected[] = {23, 25, 31, 31, 35};
  for (std::size_t n = 4; n <= 8; ++n) {
    const std::size_t m = choice_width(n, ChoiceEncoding::kSparse, 4);
    EXPECT_EQ(optimized_budget(n, m).total(), expected[n - 4]) << n;
  }
}

TEST(QubitBudget, DenseTotals) {
  const std::size_t expected[] = {23, 31, 39, 40, 45};
  for (std::size_t n = 4; n <= 8; ++n) {
    const std::size_t m = choice_width(n, ChoiceEncoding::kDense, n - 1);
    EXPECT_EQ(optimized_budget(n, m).total(), expected[n - 4]) << n;
  }
}

TEST(QubitBudget, NonOptimizedTotals) {
  const std::size_t expected[] = {36, 46, 52, 58, 64};
  for (std::size_t n = 4; n <= 8; ++n) EXPECT_EQ(nonoptimized_total(n, 2), expected[n - 4]) << n;
}

TEST(QubitBudget, SixCityDecomposition) {
  const QubitBudget b = optimized_budget(6, 2);
  EXPECT_EQ(b.cycle_qubits, 12u);
  EXPECT_EQ(b.location_qubits, 12u);
  EXPECT_EQ(b.check_qubits, 3u);
  EXPECT_EQ(b.scratch_qubits, 2u);
  EXPECT_EQ(b.result_qubits, 2u);
  EXPECT_EQ(b.cycle_qubits + b.location_qubits + b.check_qubits + b.scratch_qubits +
                b.result_qubits,
            b.total());
}

TEST(QubitBudget, ClcSetDominatesAtFourCities) {
  const QubitBudget b = optimized_budget(4, 2);
  EXPECT_GT(b.clc_qubits, b.hcd_set());
  EXPECT_EQ(b.total(), 8u + 2u + 13u);
}

TEST(QubitBudget, AsymptoticEstimateIsLinearInN) {
  const double a = asymptotic_estimate(1000000, 2);
  const double b = asymptotic_estimate(2000000, 2);
  EXPECT_GT(b / a, 1.9);
  EXPECT_LT(b / a, 2.1);
}

}  // namespace
}  // namespace gqtsp::oracle
