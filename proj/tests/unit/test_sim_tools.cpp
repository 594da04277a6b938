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

#include <random>
#include <sstream>

#include "gqtsp/sim/classical_trace.hpp"
#include "gqtsp/sim/fusion.hpp"
#include "gqtsp/sim/gate_list_io.hpp"
#include "test_support.hpp"

namespace gqtsp::sim {
namespace {

using testing::circuit_on;
using testing::random_state;

TEST(QubitLedger, RegistersArePairwiseDisjointAndCounted) {
  QubitLedger l;
  const auto a = l.allocate("a", 3);
  const auto b = l.allocate("b", 2);
  EXPECT_EQ(a, (std::vector<Qubit>{0, 1, 2}));
  EXPECT_EQ(b, (std::vector<Qubit>{3, 4}));
  EXPECT_THROW(l.allocate("a", 1), CircuitError);
  l.release("a");
  EXPECT_EQ(l.pool_free(), 3u);
  const auto c = l.allocate("c", 4);
  EXPECT_EQ(c, (std::vector<Qubit>{0, 1, 2, 5}));
  EXPECT_EQ(l.total(), 6u);
  const auto z = l.borrow_zeroed(2);
  EXPECT_EQ(z, (std::vector<Qubit>{6, 7}));
  l.return_zeroed(z);
  std::size_t live = 0;
  for (const Register& r : l.registers()) live += r.size();
  EXPECT_EQ(l.total(), live + l.pool_size());
}

TEST(Circuit, AppendRequiresAllocatedQubits) {
  Circuit c = circuit_on(2);
  EXPECT_THROW(c.append(Gate::x(2)), CircuitError);
  EXPECT_THROW(Gate::toffoli(0, 0, 1), CircuitError);
}

TEST(Circuit, CountsToffoliEquivalentsAndDepth) {
  Circuit c = circuit_on(6);
  const Qubit four[] = {0, 1, 2, 3};
  c.append(Gate::toffoli(0, 1, 2));
  c.append(Gate::toffoli(3, 4, 5));   // parallel with the first
  c.append(Gate::mcx(four, 5));       // 4 controls: 8 equivalents
  c.append(Gate::h(0));
  const GateCounts n = c.counts();
  EXPECT_EQ(n.total, 4u);
  EXPECT_EQ(n[GateKind::kToffoli], 2u);
  EXPECT_EQ(n.toffoli_equivalents, 10u);
  EXPECT_EQ(c.toffoli_depth(), 9u);
  EXPECT_EQ(c.depth(), 3u);
}

Circuit random_circuit(std::size_t width, std::size_t gates, std::uint64_t seed, bool hadamards) {
  std::mt19937_64 rng(seed);
  Circuit c = circuit_on(width);
  while (c.size() < gates) {
    const Qubit a = rng() % width, b = rng() % width, t = rng() % width;
    if (a == b || b == t || a == t) continue;
    switch (rng() % 7) {
      case 0: c.append(Gate::x(t)); break;
      case 1: c.append(Gate::toffoli(a, b, t)); break;
      case 2: c.append(Gate::cnot(a, t)); break;
      case 3: c.append(Gate::phase(t, 0.1 * static_cast<double>(rng() % 60))); break;
      case 4: c.append(Gate::controlled_phase(a, t, 0.37)); break;
      case 5: {
        const Qubit reg[] = {a, t};
        c.append(Gate::diagonal(reg, {0.0, 0.5, 1.5, 2.5}));
        break;
      }
      default:
        if (hadamards) c.append(Gate::h(t));
        break;
    }
  }
  return c;
}

TEST(Fusion, MatchesGateByGateApplication) {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const Circuit c = random_circuit(11, 300, seed, true);
    FusionOptions narrow;
    narrow.max_block_qubits = 4;
    narrow.max_hadamard_layer = 3;
    for (const FusionOptions& opt : {FusionOptions{}, narrow}) {
      StateVector a = random_state(11, seed);
      StateVector b = a;
      a.apply(c);
      CompiledCircuit(c, opt).apply(b);
      for (std::uint64_t i = 0; i < a.dimension(); ++i) {
        ASSERT_NEAR(std::abs(a[i] - b[i]), 0.0, 1e-10) << seed;
      }
    }
  }
}

TEST(Fusion, HadamardLayerAboveTheChunkSize) {
  Circuit c = circuit_on(14);
  for (Qubit q : {0u, 5u, 11u, 12u, 13u}) c.append(Gate::h(q));
  StateVector a = random_state(14, 2);
  StateVector b = a;
  a.apply(c);
  CompiledCircuit(c).apply(b);
  for (std::uint64_t i = 0; i < a.dimension(); ++i) ASSERT_NEAR(std::abs(a[i] - b[i]), 0.0, 1e-12);
}

TEST(ClassicalTrace, AgreesWithStatevectorOnBasisStates) {
  const Circuit c = random_circuit(9, 200, 17, false);
  const ClassicalTrace trace(c);
  for (std::uint64_t in = 0; in < 512; in += 7) {
    StateVector s(9);
    s.set_basis_state(in);
    s.apply(c);
    const TraceResult r = trace.run(in);
    EXPECT_NEAR(std::abs(s[r.basis] - std::polar(1.0, r.phase)), 0.0, 1e-9);
    EXPECT_EQ(trace.permute(in), r.basis);
  }
}

TEST(ClassicalTrace, RejectsHadamards) {
  Circuit c = circuit_on(1);
  c.append(Gate::h(0));
  EXPECT_THROW(ClassicalTrace{c}, CircuitError);
}

TEST(GateListIo, RoundTripIsExact) {
  Circuit c = random_circuit(6, 80, 3, true);
  const Qubit four[] = {0, 1, 2, 3};
  c.append(Gate::mcx(four, 5));
  std::stringstream text;
  write_gate_list(text, c);
  const Circuit back = read_gate_list(text);
  ASSERT_EQ(back.size(), c.size());
  EXPECT_EQ(back.ledger().total(), 6u);
  for (std::size_t i = 0; i < c.size(); ++i) EXPECT_TRUE(back.gates()[i] == c.gates()[i]) << i;
}

TEST(GateListIo, ReportsTheOffendingLine) {
  std::stringstream bad("gqtsp-gates 1\nqubits 2\nx 1 0\ncp 2 0 1\n");
  try {
    read_gate_list(bad);
    FAIL();
  } catch (const CircuitError& e) {
    EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos) << e.what();
  }
}

}  // namespace
}  // namespace gqtsp::sim
