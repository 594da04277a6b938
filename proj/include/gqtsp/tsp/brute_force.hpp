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

#include <optional>
#include <vector>

#include "gqtsp/tsp/cycle.hpp"

namespace gqtsp::tsp {

struct RankedCycle {
  CycleWord word;
  std::vector<std::size_t> tour;  // starts at city 0
  double cost = 0.0;
  std::size_t rank = 0;  // index of its undirected cycle, cheapest first
};

/// Every directed Hamiltonian cycle starting at city 0, cheapest first.
/// Each undirected cycle contributes its two orientations, which share a
/// rank. Ties are ordered by register value.
struct BruteForceResult {
  std::vector<RankedCycle> cycles;

  bool empty() const { return cycles.empty(); }
  /// Cost of the optimum; nullopt when the graph has no Hamiltonian cycle.
  std::optional<double> best_cost() const;
  /// Words of all directed cycles with the given rank.
  std::vector<CycleWord> words_of_rank(std::size_t rank) const;
  std::size_t undirected_count() const;
};

/// Enumerates the (N-1)! orderings of cities 1..N-1. Intended for N <= 10.
BruteForceResult brute_force_best(const TspGraph& graph);

}  // namespace gqtsp::tsp
