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

#include "gqtsp/tsp/graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace gqtsp::tsp {

TspGraph::TspGraph(std::size_t cities) : n_(cities), a_(cities * cities, kNoEdge) {
  if (cities < 3) throw GraphError("a tour needs at least 3 cities");
}

void TspGraph::check_pair(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_) throw GraphError("city index out of range");
  if (i == j) throw GraphError("self-loops are not edges");
}

void TspGraph::set_edge(std::size_t i, std::size_t j, double cost) {
  check_pair(i, j);
  if (!std::isfinite(cost) || cost < 0) {
    throw GraphError("edge cost must be finite and nonnegative");
  }
  a_[i * n_ + j] = cost;
  a_[j * n_ + i] = cost;
}

void TspGraph::remove_edge(std::size_t i, std::size_t j) {
  check_pair(i, j);
  a_[i * n_ + j] = kNoEdge;
  a_[j * n_ + i] = kNoEdge;
}

std::size_t TspGraph::degree(std::size_t i) const {
  std::size_t d = 0;
  for (std::size_t j = 0; j < n_; ++j) d += has_edge(i, j) ? 1 : 0;
  return d;
}

std::size_t TspGraph::max_degree() const {
  std::size_t d = 0;
  for (std::size_t i = 0; i < n_; ++i) d = std::max(d, degree(i));
  return d;
}

std::size_t TspGraph::edge_count() const {
  std::size_t e = 0;
  for (std::size_t i = 0; i < n_; ++i) e += degree(i);
  return e / 2;
}

std::size_t TspGraph::sparsity() const {
  return std::max(sparsity_, max_degree());
}

void TspGraph::set_sparsity(std::size_t d) {
  if (d < 2 || d > n_ - 1) throw GraphError("sparsity must lie in [2, N-1]");
  sparsity_ = d;
}

void TspGraph::set_coordinates(std::vector<std::array<double, 2>> coords) {
  if (coords.size() != n_) throw GraphError("one coordinate pair per city");
  coords_ = std::move(coords);
}

void TspGraph::validate() const {
  for (std::size_t i = 0; i < n_; ++i) {
    const std::size_t d = degree(i);
    if (d < 2) {
      throw GraphError("city " + std::to_string(i) + " has degree " +
                       std::to_string(d) + " and lies on no cycle");
    }
  }
  if (sparsity_ != 0 && max_degree() > sparsity_) {
    throw GraphError("maximum degree exceeds the declared sparsity");
  }
}

AdjacencyLists build_adjacency_lists(const TspGraph& graph) {
  graph.validate();
  AdjacencyLists out;
  out.lists.resize(graph.size());
  for (std::size_t i = 0; i < graph.size(); ++i) {
    for (std::size_t j = 0; j < graph.size(); ++j) {
      if (graph.has_edge(i, j)) out.lists[i].push_back(j);
    }
  }
  return out;
}

std::size_t ceil_log2(std::size_t x) {
  std::size_t bits = 0;
  while ((std::size_t{1} << bits) < x) ++bits;
  return bits;
}

Encoding encoding_for(const TspGraph& graph) {
  Encoding e;
  e.cities = graph.size();
  e.m = std::max<std::size_t>(1, ceil_log2(graph.sparsity()));
  e.n = std::max<std::size_t>(1, ceil_log2(graph.size()));
  return e;
}

}  // namespace gqtsp::tsp
