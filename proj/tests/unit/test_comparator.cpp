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

#include "gqtsp/synth/comparator.hpp"

#include <gtest/gtest.h>

#include "gqtsp/sim/classical_trace.hpp"
#include "test_support.hpp"

namespace gqtsp::synth {
namespace {

// Register qubits 0..t-1, result qubit t, carries from the pool above.
std::vector<std::uint64_t> images(std::size_t t, std::uint64_t threshold, Direction dir,
                                  std::size_t* width = nullptr) {
  Circuit c;
  const auto reg = c.ledger().allocate("reg", t);
  const Qubit result = c.ledger().allocate("result", 1)[0];
  compare_const(c, reg, threshold, result, dir);
  if (width) *width = c.ledger().total();
  const sim::ClassicalTrace trace(c);
  std::vector<std::uint64_t> out;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << t); ++v) out.push_back(trace.permute(v));
  return out;
}

TEST(CompareConst, EveryThresholdAndDirectionForFourBits) {
  for (std::uint64_t c = 0; c < 16; ++c) {
    for (Direction dir : {Direction::kLess, Direction::kGreater}) {
      const auto out = images(4, c, dir);
      for (std::uint64_t v = 0; v < 16; ++v) {
        const bool flag = dir == Direction::kLess ? v < c : v > c;
        ASSERT_EQ(out[v], v | (flag ? 16u : 0u)) << "c=" << c << " v=" << v;
      }
    }
  }
}

TEST(CompareConst, SixBitRegisterRestoresCarries) {
  for (std::uint64_t c : {0u, 1u, 31u, 32u, 45u, 62u, 63u}) {
    std::size_t width = 0;
    const auto out = images(6, c, Direction::kGreater, &width);
    EXPECT_LE(width, 6u + 1u + 5u);
    for (std::uint64_t v = 0; v < 64; ++v) ASSERT_EQ(out[v], v | (v > c ? 64u : 0u));
  }
}

TEST(CompareConst, EdgeThresholds) {
  const auto never = images(3, 0, Direction::kLess);
  for (std::uint64_t v = 0; v < 8; ++v) EXPECT_EQ(never[v], v);
  const auto all_but_top = images(3, 7, Direction::kLess);
  for (std::uint64_t v = 0; v < 8; ++v) EXPECT_EQ(all_but_top[v], v | (v != 7 ? 8u : 0u));
  Circuit c = testing::circuit_on(4);
  const Qubit reg[] = {0, 1, 2};
  EXPECT_THROW(compare_const(c, reg, 8, 3, Direction::kLess), sim::CircuitError);
}

}  // namespace
}  // namespace gqtsp::synth
