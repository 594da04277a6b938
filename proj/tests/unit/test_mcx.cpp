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

#include "gqtsp/synth/mcx.hpp"

#include <gtest/gtest.h>

#include <numeric>

#include "gqtsp/sim/classical_trace.hpp"
#include "test_support.hpp"

namespace gqtsp::synth {
namespace {

using sim::ClassicalTrace;
using sim::Gate;
using testing::circuit_on;

struct Layout {
  std::vector<Qubit> controls;
  Qubit target;
  std::vector<Qubit> ancillas;
  std::size_t width;
};

Layout layout(std::size_t n, std::size_t ancillas) {
  Layout l;
  l.controls.resize(n);
  std::iota(l.controls.begin(), l.controls.end(), Qubit{0});
  l.target = static_cast<Qubit>(n);
  for (std::size_t i = 0; i < ancillas; ++i) l.ancillas.push_back(static_cast<Qubit>(n + 1 + i));
  l.width = n + 1 + ancillas;
  return l;
}

std::uint64_t primitive_image(const Layout& l, std::uint64_t in) {
  std::uint64_t all = 0;
  for (Qubit q : l.controls) all |= std::uint64_t{1} << q;
  return (in & all) == all ? in ^ (std::uint64_t{1} << l.target) : in;
}

TEST(McxBorrowed, TwoControlsIsOneToffoli) {
  const Layout l = layout(2, 0);
  Circuit c = circuit_on(l.width);
  mcx_borrowed(c, l.controls, l.target, l.ancillas);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c.gates()[0].kind(), sim::GateKind::kToffoli);
}

TEST(McxBorrowed, TruthTableAndRestorationForThreeToSixControls) {
  for (std::size_t n = 3; n <= 6; ++n) {
    const Layout l = layout(n, n - 2);
    Circuit c = circuit_on(l.width);
    mcx_borrowed(c, l.controls, l.target, l.ancillas);
    EXPECT_EQ(c.counts()[sim::GateKind::kToffoli], 4 * (n - 2));
    EXPECT_EQ(c.size(), 4 * (n - 2));
    EXPECT_EQ(c.toffoli_depth(), 4 * (n - 2));
    const ClassicalTrace trace(c);
    for (std::uint64_t in = 0; in < (std::uint64_t{1} << l.width); ++in) {
      ASSERT_EQ(trace.permute(in), primitive_image(l, in)) << "n=" << n << " in=" << in;
    }
  }
}

TEST(McxBorrowed, FourControlsOnTheStatevector) {
  const Layout l = layout(4, 2);
  Circuit c = circuit_on(l.width);
  mcx_borrowed(c, l.controls, l.target, l.ancillas);
  for (std::uint64_t in = 0; in < 128; ++in) {
    EXPECT_EQ(testing::basis_image(c, l.width, in), static_cast<std::int64_t>(primitive_image(l, in)));
  }
}

TEST(McxBorrowed, RejectsMissingAncillas) {
  const Layout l = layout(5, 2);
  Circuit c = circuit_on(l.width);
  EXPECT_THROW(mcx_borrowed(c, l.controls, l.target, l.ancillas), sim::CircuitError);
}

TEST(McxOneZeroed, TruthTableWithZeroedAncilla) {
  for (std::size_t n = 3; n <= 6; ++n) {
    const Layout l = layout(n, 1);
    Circuit c = circuit_on(l.width);
    mcx_one_zeroed(c, l.controls, l.target, l.ancillas);
    const ClassicalTrace trace(c);
    for (std::uint64_t in = 0; in < (std::uint64_t{1} << (n + 1)); ++in) {
      ASSERT_EQ(trace.permute(in), primitive_image(l, in)) << "n=" << n << " in=" << in;
    }
  }
}

TEST(McxOneZeroed, ToffoliCountForEvenAndOddControls) {
  // Four borrowed-ancilla steps; a step with two controls is one Toffoli.
  const std::size_t expected[] = {0, 0, 0, 4, 10, 16, 24, 32};
  for (std::size_t n = 3; n <= 7; ++n) {
    const Layout l = layout(n, 1);
    Circuit c = circuit_on(l.width);
    mcx_one_zeroed(c, l.controls, l.target, l.ancillas);
    EXPECT_EQ(c.counts().toffoli_equivalents, expected[n]) << n;
    EXPECT_LE(c.toffoli_depth(), expected[n]) << n;
  }
}

TEST(McxOneZeroed, RejectsAnEmptyAncillaPool) {
  const Layout l = layout(3, 0);
  Circuit c = circuit_on(l.width);
  EXPECT_THROW(mcx_one_zeroed(c, l.controls, l.target, {}), sim::CircuitError);
}

TEST(OrGate, MatchesClassicalOr) {
  for (std::size_t n = 1; n <= 6; ++n) {
    Circuit c = circuit_on(n + 1);
    std::vector<Qubit> in(n);
    std::iota(in.begin(), in.end(), Qubit{0});
    or_gate(c, in, static_cast<Qubit>(n));
    const ClassicalTrace trace(c);
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
      const std::uint64_t expect = x | (x != 0 ? std::uint64_t{1} << n : 0);
      ASSERT_EQ(trace.permute(x), expect);
    }
  }
}

}  // namespace
}  // namespace gqtsp::synth
