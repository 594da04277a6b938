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

#include <cmath>
#include <numbers>
#include <random>

#include "gqtsp/tsp/brute_force.hpp"
#include "gqtsp/tsp/generator.hpp"
#include "gqtsp/tsp/graph_io.hpp"
#include "gqtsp/tsp/phases.hpp"

namespace gqtsp::tsp {
namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

TEST(NormalizePhases, UnitWeightsPutEveryCycleInOneBucket) {
  TspGraph g(4);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) g.set_edge(i, j, 1.0);
  }
  const NormalizedPhases p = normalize_phases(g, 6);
  const auto r = brute_force_best(g);
  for (const RankedCycle& c : r.cycles) {
    EXPECT_EQ(p.bucket_of_phase(p.phase_of(c.word)), p.bucket_of_phase(p.phase_of(r.cycles[0].word)));
  }
}

TEST(NormalizePhases, PaddingEntriesAreExactlyZero) {
  TspGraph g = random_euclidean_graph(6, 3, 4);
  const NormalizedPhases p = normalize_phases(g, 6);
  const auto lists = build_adjacency_lists(g);
  for (std::size_t j = 0; j < 6; ++j) {
    ASSERT_EQ(p.tables[j].angles.size(), 4u);
    for (std::size_t k = lists[j].size(); k < 4; ++k) EXPECT_EQ(p.tables[j].angles[k], 0.0);
  }
}

TEST(NormalizePhases, InRangePhasesStayBelowTheTopBucket) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const TspGraph g = random_euclidean_graph(5, 4, seed);
    const NormalizedPhases p = normalize_phases(g, 6);
    const auto lists = build_adjacency_lists(g);
    for (std::uint64_t v = 0; v < 1024; ++v) {
      const CycleWord w = CycleWord::from_register(v, 5, 2);
      if (!in_range(lists, w)) continue;
      EXPECT_LE(p.phase_of(w), kTwoPi * (1 - 1.0 / 64) + 1e-12);
      EXPECT_GE(p.phase_of(w), 0.0);
    }
  }
}

TEST(NormalizePhases, ShorterToursGetLargerPhases) {
  const TspGraph g = random_euclidean_graph(5, 4, 3);
  const NormalizedPhases p = normalize_phases(g, 6);
  const auto r = brute_force_best(g);
  for (std::size_t i = 1; i < r.cycles.size(); ++i) {
    EXPECT_GE(p.phase_of(r.cycles[i - 1].word), p.phase_of(r.cycles[i].word) - 1e-12);
  }
}

TEST(NormalizePhases, QuantizeRoundTripWithinOneBucket) {
  const TspGraph g = random_euclidean_graph(4, 3, 12);
  const NormalizedPhases p = normalize_phases(g, 6);
  const auto lists = build_adjacency_lists(g);
  std::mt19937_64 rng(1);
  std::size_t checked = 0;
  while (checked < 1000) {
    const CycleWord w = CycleWord::from_register(rng() % 256, 4, 2);
    const auto c = cost(g, lists, w);
    if (!c) continue;
    ++checked;
    EXPECT_LE(std::abs(p.dequantize(p.quantize(*c)) - *c), p.bucket_width() / 2 + 1e-9);
    EXPECT_EQ(p.quantize(*c), p.bucket_of_phase(p.phase_of(w)));
  }
}

TEST(NormalizePhases, IntegerUnitsAreExactFractions) {
  GeneratorOptions opt;
  opt.integer_scale = 10.0;
  const TspGraph g = random_euclidean_graph(4, 3, 5, opt);
  ASSERT_TRUE(integer_units_possible(g, 6));
  const NormalizedPhases p = normalize_phases(g, 6, PhaseScaling::kIntegerUnits);
  const auto lists = build_adjacency_lists(g);
  for (std::uint64_t v = 0; v < 256; ++v) {
    const CycleWord w = CycleWord::from_register(v, 4, 2);
    const double units = p.phase_of(w) / kTwoPi * 64;
    EXPECT_NEAR(units, std::round(units), 1e-9);
  }
  TspGraph fractional = g;
  fractional.set_edge(0, 1, 0.5);
  EXPECT_THROW(normalize_phases(fractional, 6, PhaseScaling::kIntegerUnits), GraphError);
}

TEST(Generator, DeterministicInTheSeed) {
  EXPECT_EQ(graph_to_json(random_euclidean_graph(6, 4, 77)),
            graph_to_json(random_euclidean_graph(6, 4, 77)));
  EXPECT_NE(graph_to_json(random_euclidean_graph(6, 4, 77)),
            graph_to_json(random_euclidean_graph(6, 4, 78)));
}

TEST(Generator, FullDegreeIsComplete) {
  const TspGraph g = random_euclidean_graph(4, 3, 1);
  EXPECT_EQ(g.edge_count(), 6u);
}

TEST(Generator, DegreesStayWithinBounds) {
  std::size_t built = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    for (std::size_t d : {3u, 4u}) {
      try {
        const TspGraph g = random_euclidean_graph(7, d, seed);
        ++built;
        for (std::size_t i = 0; i < 7; ++i) {
          EXPECT_GE(g.degree(i), 2u);
          EXPECT_LE(g.degree(i), d);
        }
      } catch (const GraphError&) {
        // infeasible seed; the caller regenerates
      }
    }
  }
  EXPECT_GT(built, 50u);
}

TEST(Generator, SquaredDistanceOption) {
  GeneratorOptions sq;
  sq.distance = DistanceKind::kSquaredEuclidean;
  const TspGraph plain = random_euclidean_graph(4, 3, 9);
  const TspGraph squared = random_euclidean_graph(4, 3, 9, sq);
  EXPECT_NEAR(squared.cost(0, 1), plain.cost(0, 1) * plain.cost(0, 1), 1e-15);
}

}  // namespace
}  // namespace gqtsp::tsp
