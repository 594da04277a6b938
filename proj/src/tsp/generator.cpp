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

#include "gqtsp/tsp/generator.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <tuple>
#include <vector>

namespace gqtsp::tsp {

namespace {

bool connected(const TspGraph& g) {
  std::vector<bool> seen(g.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (!seen[j] && g.has_edge(i, j)) {
        seen[j] = true;
        ++count;
        stack.push_back(j);
      }
    }
  }
  return count == g.size();
}

}  // namespace

TspGraph random_euclidean_graph(std::size_t cities, std::size_t d, std::uint64_t seed,
                                const GeneratorOptions& options) {
  if (cities < 3) throw GraphError("a tour needs at least 3 cities");
  if (d < 2 || d > cities - 1) throw GraphError("degree bound must lie in [2, N-1]");
  std::mt19937_64 rng(seed);
  auto uniform = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  std::vector<std::array<double, 2>> xy(cities);
  for (auto& p : xy) {
    p[0] = uniform();
    p[1] = uniform();
  }

  TspGraph g(cities);
  std::vector<std::tuple<double, std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < cities; ++i) {
    for (std::size_t j = i + 1; j < cities; ++j) {
      const double dx = xy[i][0] - xy[j][0];
      const double dy = xy[i][1] - xy[j][1];
      const double sq = dx * dx + dy * dy;
      double c = options.distance == DistanceKind::kEuclidean ? std::sqrt(sq) : sq;
      if (options.integer_scale) c = std::max(1.0, std::round(*options.integer_scale * c));
      g.set_edge(i, j, c);
      edges.emplace_back(sq, i, j);
    }
  }
  g.set_coordinates(xy);

  // Longest first by geometric length; ties resolved by index.
  std::sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) {
    if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) > std::get<0>(b);
    return std::tie(std::get<1>(a), std::get<2>(a)) < std::tie(std::get<1>(b), std::get<2>(b));
  });
  for (const auto& [len, i, j] : edges) {
    if (g.degree(i) <= d && g.degree(j) <= d) continue;
    if (g.degree(i) <= 2 || g.degree(j) <= 2) continue;
    const double c = g.cost(i, j);
    g.remove_edge(i, j);
    if (!connected(g)) g.set_edge(i, j, c);
  }
  if (g.max_degree() > d) {
    throw GraphError("pruning cannot reach degree " + std::to_string(d) +
                     " for this seed; try another seed");
  }
  g.set_sparsity(d);
  return g;
}

}  // namespace gqtsp::tsp
