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

#include "gqtsp/tsp/brute_force.hpp"

#include <algorithm>
#include <numeric>

namespace gqtsp::tsp {

namespace {

constexpr std::size_t kMaxCities = 11;

std::vector<std::size_t> canonical(const std::vector<std::size_t>& tour) {
  std::vector<std::size_t> reversed{tour.front()};
  reversed.insert(reversed.end(), tour.rbegin(), tour.rend() - 1);
  return std::min(tour, reversed);
}

}  // namespace

std::optional<double> BruteForceResult::best_cost() const {
  if (cycles.empty()) return std::nullopt;
  return cycles.front().cost;
}

std::vector<CycleWord> BruteForceResult::words_of_rank(std::size_t rank) const {
  std::vector<CycleWord> out;
  for (const RankedCycle& c : cycles) {
    if (c.rank == rank) out.push_back(c.word);
  }
  return out;
}

std::size_t BruteForceResult::undirected_count() const {
  return cycles.empty() ? 0 : cycles.back().rank + 1;
}

BruteForceResult brute_force_best(const TspGraph& graph) {
  const std::size_t n = graph.size();
  if (n > kMaxCities) throw GraphError("brute force is limited to 11 cities");
  const AdjacencyLists lists = build_adjacency_lists(graph);
  const Encoding enc = encoding_for(graph);

  BruteForceResult result;
  std::vector<std::vector<std::size_t>> keys;
  std::vector<std::size_t> rest(n - 1);
  std::iota(rest.begin(), rest.end(), std::size_t{1});
  do {
    std::vector<std::size_t> tour{0};
    tour.insert(tour.end(), rest.begin(), rest.end());
    bool ok = true;
    for (std::size_t k = 0; k < n && ok; ++k) ok = graph.has_edge(tour[k], tour[(k + 1) % n]);
    if (!ok) continue;
    // Summing along the canonical orientation gives both orientations the
    // bit-identical cost.
    std::vector<std::size_t> key = canonical(tour);
    double sum = 0.0;
    for (std::size_t k = 0; k < n; ++k) sum += graph.cost(key[k], key[(k + 1) % n]);
    RankedCycle c;
    c.word = word_from_tour(lists, tour, enc.m);
    c.tour = std::move(tour);
    c.cost = sum;
    result.cycles.push_back(std::move(c));
    keys.push_back(std::move(key));
  } while (std::next_permutation(rest.begin(), rest.end()));

  std::vector<std::size_t> order(result.cycles.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    const RankedCycle& cx = result.cycles[x];
    const RankedCycle& cy = result.cycles[y];
    if (cx.cost != cy.cost) return cx.cost < cy.cost;
    if (keys[x] != keys[y]) return keys[x] < keys[y];
    return cx.word.to_register() < cy.word.to_register();
  });
  std::vector<RankedCycle> sorted;
  sorted.reserve(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    RankedCycle c = std::move(result.cycles[order[k]]);
    c.rank = k == 0 ? 0
                    : sorted.back().rank + (keys[order[k]] == keys[order[k - 1]] ? 0 : 1);
    sorted.push_back(std::move(c));
  }
  result.cycles = std::move(sorted);
  return result;
}

}  // namespace gqtsp::tsp
