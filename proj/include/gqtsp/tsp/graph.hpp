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

#include <array>
#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

namespace gqtsp::tsp {

/// Thrown for malformed instances and infeasible generation requests.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr double kNoEdge = std::numeric_limits<double>::infinity();

/// Weighted undirected graph on cities 0..N-1. Absent edges and the
/// diagonal hold kNoEdge.
class TspGraph {
 public:
  explicit TspGraph(std::size_t cities);

  std::size_t size() const { return n_; }
  double cost(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  bool has_edge(std::size_t i, std::size_t j) const { return cost(i, j) != kNoEdge; }

  /// Sets a_ij = a_ji = cost. Requires i != j and a finite cost >= 0.
  void set_edge(std::size_t i, std::size_t j, double cost);
  void remove_edge(std::size_t i, std::size_t j);

  std::size_t degree(std::size_t i) const;
  std::size_t max_degree() const;
  std::size_t edge_count() const;

  /// Sparsity degree d used for the choice encoding. Defaults to the
  /// maximum degree; a larger declared bound may be set.
  std::size_t sparsity() const;
  void set_sparsity(std::size_t d);

  const std::optional<std::vector<std::array<double, 2>>>& coordinates() const {
    return coords_;
  }
  void set_coordinates(std::vector<std::array<double, 2>> coords);

  /// Throws GraphError unless 2 <= d_i <= N-1 for every city and the
  /// declared sparsity covers the maximum degree.
  void validate() const;

 private:
  void check_pair(std::size_t i, std::size_t j) const;

  std::size_t n_;
  std::vector<double> a_;
  std::size_t sparsity_ = 0;
  std::optional<std::vector<std::array<double, 2>>> coords_;
};

/// P_i: neighbors of city i in increasing order.
struct AdjacencyLists {
  std::vector<std::vector<std::size_t>> lists;

  std::size_t size() const { return lists.size(); }
  const std::vector<std::size_t>& operator[](std::size_t i) const { return lists[i]; }
};

/// Throws GraphError if some city has fewer than two neighbors.
AdjacencyLists build_adjacency_lists(const TspGraph& graph);

/// Register widths: m = ceil(log2 d) bits per choice, n = ceil(log2 N) bits
/// per city index, both at least 1.
struct Encoding {
  std::size_t cities = 0;
  std::size_t m = 0;
  std::size_t n = 0;

  std::size_t cycle_bits() const { return m * cities; }
};

std::size_t ceil_log2(std::size_t x);
Encoding encoding_for(const TspGraph& graph);

}  // namespace gqtsp::tsp
