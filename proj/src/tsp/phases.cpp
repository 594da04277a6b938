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

#include "gqtsp/tsp/phases.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace gqtsp::tsp {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double largest_edge(const TspGraph& g) {
  double m = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (g.has_edge(i, j)) m = std::max(m, g.cost(i, j));
    }
  }
  return m;
}

// Largest shifted cost sum over in-range words: each city takes its
// cheapest outgoing edge.
double largest_shifted_sum(const TspGraph& g, const AdjacencyLists& lists, double top) {
  double sum = 0.0;
  for (std::size_t j = 0; j < g.size(); ++j) {
    double best = 0.0;
    for (std::size_t k : lists[j]) best = std::max(best, top - g.cost(j, k));
    sum += best;
  }
  return sum;
}

bool integral(double x) { return std::floor(x) == x; }

}  // namespace

double NormalizedPhases::phase_of(const CycleWord& word) const {
  if (word.size() != cities) throw GraphError("word length does not match the graph");
  double sum = 0.0;
  for (std::size_t j = 0; j < cities; ++j) {
    const auto& angles = tables[j].angles;
    if (word.choices[j] >= angles.size()) throw GraphError("choice exceeds its width");
    sum += angles[word.choices[j]];
  }
  return sum;
}

std::uint64_t NormalizedPhases::bucket_of_phase(double phase) const {
  const double scale = std::ldexp(1.0, static_cast<int>(t));
  const double b = std::round(sim::wrap_angle(phase) / kTwoPi * scale);
  return static_cast<std::uint64_t>(b) % static_cast<std::uint64_t>(scale);
}

std::uint64_t NormalizedPhases::quantize(double cost) const {
  const double shifted = static_cast<double>(cities) * max_edge_cost - cost;
  return bucket_of_phase(shifted * radians_per_unit);
}

double NormalizedPhases::bucket_width() const {
  if (radians_per_unit == 0.0) return 0.0;
  return kTwoPi / std::ldexp(1.0, static_cast<int>(t)) / radians_per_unit;
}

double NormalizedPhases::dequantize(std::uint64_t bucket) const {
  return static_cast<double>(cities) * max_edge_cost -
         static_cast<double>(bucket) * bucket_width();
}

bool integer_units_possible(const TspGraph& graph, std::size_t t) {
  if (t == 0 || t > 30) return false;
  const AdjacencyLists lists = build_adjacency_lists(graph);
  const double top = largest_edge(graph);
  if (!integral(top)) return false;
  for (std::size_t i = 0; i < graph.size(); ++i) {
    for (std::size_t j : lists[i]) {
      if (!integral(graph.cost(i, j))) return false;
    }
  }
  return largest_shifted_sum(graph, lists, top) < std::ldexp(1.0, static_cast<int>(t));
}

NormalizedPhases normalize_phases(const TspGraph& graph, std::size_t t,
                                  PhaseScaling scaling) {
  if (t == 0 || t > 30) throw GraphError("precision t must lie in [1, 30]");
  const AdjacencyLists lists = build_adjacency_lists(graph);
  const Encoding enc = encoding_for(graph);

  NormalizedPhases out;
  out.cities = graph.size();
  out.m = enc.m;
  out.t = t;
  out.scaling = scaling;
  out.max_edge_cost = largest_edge(graph);
  const double top = out.max_edge_cost;
  const double span = largest_shifted_sum(graph, lists, top);
  const double full = std::ldexp(1.0, static_cast<int>(t));
  if (scaling == PhaseScaling::kIntegerUnits) {
    if (!integer_units_possible(graph, t)) {
      throw GraphError("integer-unit phases need integer costs with shifted sums below 2^t");
    }
    out.radians_per_unit = kTwoPi / full;
  } else {
    out.radians_per_unit = span > 0.0 ? kTwoPi * (1.0 - 1.0 / full) / span : 0.0;
  }

  out.tables.resize(out.cities);
  for (std::size_t j = 0; j < out.cities; ++j) {
    auto& angles = out.tables[j].angles;
    angles.assign(std::size_t{1} << enc.m, 0.0);
    for (std::size_t k = 0; k < lists[j].size(); ++k) {
      angles[k] = (top - graph.cost(j, lists[j][k])) * out.radians_per_unit;
    }
  }
  return out;
}

}  // namespace gqtsp::tsp
