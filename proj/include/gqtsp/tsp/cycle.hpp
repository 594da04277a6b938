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
#include <optional>
#include <vector>

#include "gqtsp/tsp/graph.hpp"

namespace gqtsp::tsp {

/// One m-bit choice C_i per city. As a register value, C_i occupies bits
/// [i*m, (i+1)*m).
struct CycleWord {
  std::vector<std::uint32_t> choices;
  std::size_t m = 0;

  std::size_t size() const { return choices.size(); }
  std::uint64_t to_register() const;
  static CycleWord from_register(std::uint64_t value, std::size_t cities, std::size_t m);

  friend bool operator==(const CycleWord&, const CycleWord&) = default;
};

/// True iff C_i < #P_i for every city.
bool in_range(const AdjacencyLists& lists, const CycleWord& word);

/// pi(i) = P_i[C_i], or nullopt when C_i >= #P_i.
std::optional<std::size_t> decode_successor(const AdjacencyLists& lists,
                                            const CycleWord& word, std::size_t city);

/// Sum over cities of a_{j, P_j[C_j]}; nullopt for out-of-range words.
std::optional<double> cost(const TspGraph& graph, const AdjacencyLists& lists,
                           const CycleWord& word);

/// pi^j(0) != 0 for 1 <= j <= N-1 and pi^N(0) = 0.
bool is_hamiltonian_theorem1(const AdjacencyLists& lists, const CycleWord& word);
/// As is_hamiltonian_theorem1 but checking only proper divisors j of N,
/// plus pi^N(0) = 0.
bool is_hamiltonian_theorem2(const AdjacencyLists& lists, const CycleWord& word);
/// The decoded successor map is a permutation whose cycle through city 0
/// covers all cities.
bool is_single_cycle(const AdjacencyLists& lists, const CycleWord& word);

/// Number of divisors of n, including 1 and n.
std::size_t sigma0(std::size_t n);
/// Divisors j of n with 1 <= j < n, increasing.
std::vector<std::size_t> proper_divisors(std::size_t n);

/// The word that encodes the closed tour 0 -> tour[1] -> ... -> 0.
/// Throws GraphError if a step is not an edge.
CycleWord word_from_tour(const AdjacencyLists& lists, const std::vector<std::size_t>& tour,
                         std::size_t m);
/// The tour from city 0 along the successor map, or nullopt if invalid.
std::optional<std::vector<std::size_t>> tour_from_word(const AdjacencyLists& lists,
                                                       const CycleWord& word);

}  // namespace gqtsp::tsp
