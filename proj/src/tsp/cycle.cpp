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

#include "gqtsp/tsp/cycle.hpp"

#include <algorithm>

namespace gqtsp::tsp {

std::uint64_t CycleWord::to_register() const {
  if (m * choices.size() > 63) throw GraphError("cycle word too wide for a register");
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < choices.size(); ++i) {
    if (choices[i] >> m) throw GraphError("choice exceeds its width");
    v |= std::uint64_t{choices[i]} << (i * m);
  }
  return v;
}

CycleWord CycleWord::from_register(std::uint64_t value, std::size_t cities, std::size_t m) {
  if (m == 0 || m * cities > 63) throw GraphError("cycle word too wide for a register");
  CycleWord w;
  w.m = m;
  w.choices.resize(cities);
  const std::uint64_t mask = (std::uint64_t{1} << m) - 1;
  for (std::size_t i = 0; i < cities; ++i) {
    w.choices[i] = static_cast<std::uint32_t>((value >> (i * m)) & mask);
  }
  return w;
}

bool in_range(const AdjacencyLists& lists, const CycleWord& word) {
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word.choices[i] >= lists[i].size()) return false;
  }
  return true;
}

std::optional<std::size_t> decode_successor(const AdjacencyLists& lists,
                                            const CycleWord& word, std::size_t city) {
  if (city >= lists.size() || city >= word.size()) throw GraphError("city out of range");
  const std::uint32_t c = word.choices[city];
  if (c >= lists[city].size()) return std::nullopt;
  return lists[city][c];
}

std::optional<double> cost(const TspGraph& graph, const AdjacencyLists& lists,
                           const CycleWord& word) {
  double sum = 0.0;
  for (std::size_t j = 0; j < word.size(); ++j) {
    const auto next = decode_successor(lists, word, j);
    if (!next) return std::nullopt;
    sum += graph.cost(j, *next);
  }
  return sum;
}

namespace {

// pi^j(0) for j = 0..N, stopping at the first undefined step.
std::vector<std::size_t> orbit_of_zero(const AdjacencyLists& lists, const CycleWord& word) {
  std::vector<std::size_t> orbit{0};
  for (std::size_t j = 1; j <= word.size(); ++j) {
    const auto next = decode_successor(lists, word, orbit.back());
    if (!next) break;
    orbit.push_back(*next);
  }
  return orbit;
}

}  // namespace

bool is_hamiltonian_theorem1(const AdjacencyLists& lists, const CycleWord& word) {
  const std::size_t n = word.size();
  const auto orbit = orbit_of_zero(lists, word);
  if (orbit.size() != n + 1) return false;
  for (std::size_t j = 1; j < n; ++j) {
    if (orbit[j] == 0) return false;
  }
  return orbit[n] == 0;
}

bool is_hamiltonian_theorem2(const AdjacencyLists& lists, const CycleWord& word) {
  const std::size_t n = word.size();
  const auto orbit = orbit_of_zero(lists, word);
  if (orbit.size() != n + 1) return false;
  for (std::size_t j : proper_divisors(n)) {
    if (orbit[j] == 0) return false;
  }
  return orbit[n] == 0;
}

bool is_single_cycle(const AdjacencyLists& lists, const CycleWord& word) {
  const std::size_t n = word.size();
  std::vector<std::size_t> next(n);
  std::vector<bool> hit(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const auto s = decode_successor(lists, word, i);
    if (!s || hit[*s]) return false;  // undefined or not injective
    hit[*s] = true;
    next[i] = *s;
  }
  std::size_t length = 0;
  std::size_t city = 0;
  do {
    city = next[city];
    ++length;
  } while (city != 0);
  return length == n;
}

std::size_t sigma0(std::size_t n) {
  if (n == 0) throw GraphError("sigma0 needs n >= 1");
  return proper_divisors(n).size() + 1;
}

std::vector<std::size_t> proper_divisors(std::size_t n) {
  if (n == 0) throw GraphError("divisors need n >= 1");
  std::vector<std::size_t> out;
  for (std::size_t j = 1; j < n; ++j) {
    if (n % j == 0) out.push_back(j);
  }
  return out;
}

CycleWord word_from_tour(const AdjacencyLists& lists, const std::vector<std::size_t>& tour,
                         std::size_t m) {
  const std::size_t n = lists.size();
  if (tour.size() != n || tour.front() != 0) throw GraphError("tour must start at city 0");
  CycleWord w;
  w.m = m;
  w.choices.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t from = tour[k];
    const std::size_t to = tour[(k + 1) % n];
    const auto& p = lists[from];
    const auto it = std::lower_bound(p.begin(), p.end(), to);
    if (it == p.end() || *it != to) throw GraphError("tour step is not an edge");
    w.choices[from] = static_cast<std::uint32_t>(it - p.begin());
  }
  return w;
}

std::optional<std::vector<std::size_t>> tour_from_word(const AdjacencyLists& lists,
                                                       const CycleWord& word) {
  if (!is_hamiltonian_theorem1(lists, word)) return std::nullopt;
  auto orbit = orbit_of_zero(lists, word);
  orbit.pop_back();
  return orbit;
}

}  // namespace gqtsp::tsp
