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

#include "gqtsp/sim/state_vector.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "test_support.hpp"

namespace gqtsp::sim {
namespace {

using testing::circuit_on;
using testing::random_state;

TEST(StateVector, StartsInZeroState) {
  for (std::size_t n : {1, 3, 10}) {
    StateVector s(n);
    EXPECT_EQ(s.dimension(), std::uint64_t{1} << n);
    EXPECT_EQ(s[0], Amplitude(1.0));
    EXPECT_NEAR(s.norm_squared(), 1.0, 1e-12);
  }
}

TEST(StateVector, AllocatesTwentyThreeQubits) {
  StateVector s(23);
  EXPECT_EQ(s.dimension(), std::uint64_t{1} << 23);
  EXPECT_NEAR(s.norm_squared(), 1.0, 1e-12);
}

TEST(StateVector, RejectsSizesOutsideTheBound) {
  EXPECT_THROW(StateVector(0), CircuitError);
  EXPECT_THROW(StateVector(StateVector::max_qubits() + 1), ResourceError);
  EXPECT_GE(StateVector::max_qubits(), 25u);
}

TEST(StateVector, HadamardOnZero) {
  StateVector s(1);
  s.apply(Gate::h(0));
  EXPECT_NEAR(s[0].real(), 1 / std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(s[1].real(), 1 / std::sqrt(2.0), 1e-12);
}

TEST(StateVector, XFlipsLeastSignificantQubit) {
  StateVector s(2);
  s.apply(Gate::x(0));
  EXPECT_EQ(s[1], Amplitude(1.0));
  EXPECT_EQ(s[0], Amplitude(0.0));
}

TEST(StateVector, ControlledPhasePiNegatesOneOne) {
  StateVector s(2);
  s.set_basis_state(3);
  s.apply(Gate::controlled_phase(0, 1, std::numbers::pi));
  EXPECT_NEAR(s[3].real(), -1.0, 1e-12);
  EXPECT_NEAR(s[3].imag(), 0.0, 1e-12);
}

TEST(StateVector, MultiControlledXNeedsAllControls) {
  const Qubit controls[] = {0, 2, 3};
  for (std::uint64_t in = 0; in < 32; ++in) {
    StateVector s(5);
    s.set_basis_state(in);
    s.apply(Gate::mcx(controls, 4));
    const std::uint64_t expect = (in & 0b1101) == 0b1101 ? in ^ 16 : in;
    EXPECT_EQ(s[expect], Amplitude(1.0)) << in;
  }
}

TEST(StateVector, RejectsOutOfRangeQubits) {
  StateVector s(2);
  EXPECT_THROW(s.apply(Gate::x(2)), CircuitError);
  Circuit wide = circuit_on(3);
  EXPECT_THROW(s.apply(wide), CircuitError);
}

TEST(StateVector, EmptyCircuitLeavesStateUnchanged) {
  StateVector s = random_state(4, 1);
  const std::vector<Amplitude> before(s.amplitudes().begin(), s.amplitudes().end());
  s.apply(circuit_on(4));
  for (std::size_t i = 0; i < before.size(); ++i) EXPECT_EQ(s[i], before[i]);
}

std::vector<Gate> one_of_each_kind() {
  const Qubit three[] = {0, 2, 4};
  const Qubit reg[] = {3, 1, 4};
  return {Gate::x(1),
          Gate::h(2),
          Gate::phase(3, 0.7),
          Gate::controlled_phase(0, 4, 2.1),
          Gate::toffoli(1, 3, 0),
          Gate::mcx(three, 1),
          Gate::diagonal(reg, {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 5.8})};
}

TEST(StateVector, EveryGateKindIsInvertedByItsInverse) {
  for (const Gate& g : one_of_each_kind()) {
    StateVector s = random_state(5, 7);
    const std::vector<Amplitude> before(s.amplitudes().begin(), s.amplitudes().end());
    s.apply(g);
    EXPECT_NEAR(s.norm_squared(), 1.0, 1e-9);
    s.apply(g.inverse());
    for (std::size_t i = 0; i < before.size(); ++i) {
      EXPECT_NEAR(std::abs(s[i] - before[i]), 0.0, 1e-9) << to_string(g.kind());
    }
  }
}

TEST(StateVector, CircuitFollowedByMirrorIsIdentity) {
  Circuit c = circuit_on(5);
  for (const Gate& g : one_of_each_kind()) c.append(g);
  const std::size_t n = c.size();
  c.append_mirror(0, n);
  StateVector s = random_state(5, 3);
  const std::vector<Amplitude> before(s.amplitudes().begin(), s.amplitudes().end());
  s.apply(c);
  for (std::size_t i = 0; i < before.size(); ++i) EXPECT_NEAR(std::abs(s[i] - before[i]), 0.0, 1e-9);
}

TEST(StateVector, NormIsPreservedOverLongRandomSequences) {
  std::mt19937_64 rng(11);
  StateVector s(8);
  for (int step = 0; step < 2000; ++step) {
    const Qubit a = rng() % 8;
    Qubit b = rng() % 8;
    if (b == a) b = (a + 1) % 8;
    switch (rng() % 4) {
      case 0: s.apply(Gate::h(a)); break;
      case 1: s.apply(Gate::controlled_phase(a, b, 0.001 * step)); break;
      case 2: s.apply(Gate::cnot(a, b)); break;
      default: s.apply(Gate::phase(a, 1.3)); break;
    }
  }
  EXPECT_NEAR(s.norm_squared(), 1.0, 1e-9);
}

TEST(StateVector, DiagonalMatchesExplicitMatrix) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> angle(0.0, 6.0);
  for (std::size_t k = 1; k <= 4; ++k) {
    std::vector<Qubit> reg;
    for (std::size_t i = 0; i < k; ++i) reg.push_back(static_cast<Qubit>(k - 1 - i));
    std::vector<double> theta(std::size_t{1} << k);
    for (double& t : theta) t = angle(rng);
    Circuit c = circuit_on(k);
    c.append(Gate::diagonal(reg, theta));
    const auto u = testing::unitary_of(c, k);
    for (std::uint64_t j = 0; j < u.size(); ++j) {
      std::uint64_t value = 0;  // reg is bit-reversed
      for (std::size_t i = 0; i < k; ++i) value |= ((j >> reg[i]) & 1U) << i;
      for (std::uint64_t i = 0; i < u.size(); ++i) {
        const Amplitude expect = i == j ? std::polar(1.0, theta[value]) : Amplitude(0.0);
        EXPECT_NEAR(std::abs(u[i][j] - expect), 0.0, 1e-12);
      }
    }
  }
}

TEST(Probabilities, BasisAndUniform) {
  StateVector s(8);
  Circuit c("uniform");
  const auto reg = c.ledger().allocate("c", 8);
  EXPECT_DOUBLE_EQ(basis_probability(s, c.ledger(), "c", 0), 1.0);
  for (Qubit q : reg) s.apply(Gate::h(q));
  EXPECT_NEAR(basis_probability(s, c.ledger(), "c", 77), 1.0 / 256, 1e-12);
  double total = 0.0;
  for (std::uint64_t v = 0; v < 256; ++v) total += basis_probability(s, c.ledger(), "c", v);
  EXPECT_NEAR(total, 1.0, 1e-9);
  EXPECT_THROW(basis_probability(s, c.ledger(), "missing", 0), CircuitError);
  EXPECT_THROW(basis_probability(s, c.ledger(), "c", 256), CircuitError);
}

TEST(Probabilities, RegisterOrderIsRespected) {
  StateVector s(4);
  s.set_basis_state(0b0110);
  const Qubit forward[] = {1, 2};
  const Qubit backward[] = {3, 0};
  EXPECT_DOUBLE_EQ(register_probability(s, forward, 3), 1.0);
  EXPECT_DOUBLE_EQ(register_probability(s, backward, 0), 1.0);
  s.set_basis_state(0b1000);
  EXPECT_DOUBLE_EQ(register_probability(s, backward, 1), 1.0);
  const auto dist = register_distribution(s, backward);
  EXPECT_DOUBLE_EQ(dist[1], 1.0);
}

TEST(Sampling, ZeroStateAlwaysReadsZero) {
  StateVector s(1);
  const Qubit q[] = {0};
  const auto counts = sample(s, 100, q, 1);
  ASSERT_EQ(counts.size(), 1u);
  EXPECT_EQ(counts.at("0"), 100u);
}

TEST(Sampling, PlusStateIsBalanced) {
  StateVector s(1);
  s.apply(Gate::h(0));
  const Qubit q[] = {0};
  const auto counts = sample(s, 10000, q, 42);
  const double sigma = std::sqrt(10000 * 0.25);
  EXPECT_NEAR(static_cast<double>(counts.at("0")), 5000.0, 5 * sigma);
  EXPECT_EQ(counts.at("0") + counts.at("1"), 10000u);
}

TEST(Sampling, EqualSeedsAreIdenticalAndDistributionFits) {
  StateVector s = random_state(4, 99);
  const Qubit q[] = {0, 1, 2};
  const auto a = sample(s, 10000, q, 5);
  EXPECT_EQ(a, sample(s, 10000, q, 5));
  EXPECT_NE(a, sample(s, 10000, q, 6));
  // Chi-square with 7 degrees of freedom; 24.32 is the 0.001 quantile.
  const auto dist = register_distribution(s, q);
  double chi2 = 0.0;
  for (std::uint64_t v = 0; v < 8; ++v) {
    const auto it = a.find(to_bitstring(v, 3));
    const double observed = it == a.end() ? 0.0 : static_cast<double>(it->second);
    const double expected = 10000 * dist[v];
    chi2 += (observed - expected) * (observed - expected) / expected;
  }
  EXPECT_LT(chi2, 24.32);
}

TEST(Sampling, BitstringPutsLastQubitLeft) {
  StateVector s(3);
  s.set_basis_state(0b001);
  const Qubit q[] = {0, 2};
  EXPECT_EQ(sample(s, 3, q, 0).begin()->first, "01");
  EXPECT_THROW(sample(s, 3, std::span<const Qubit>{}, 0), CircuitError);
}

}  // namespace
}  // namespace gqtsp::sim
