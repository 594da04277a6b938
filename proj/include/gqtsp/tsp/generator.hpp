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

#include "gqtsp/tsp/graph.hpp"

namespace gqtsp::tsp {

enum class DistanceKind { kEuclidean, kSquaredEuclidean };

struct GeneratorOptions {
  DistanceKind distance = DistanceKind::kEuclidean;
  /// When set, each cost becomes max(1, round(scale * distance)).
  std::optional<double> integer_scale;
};

/// N cities uniform in [0,1]^2 (coordinates drawn from mt19937_64 as
/// 53-bit fractions, x then y per city), complete graph of distances, then
/// pruned to maximum degree d: edges are visited longest first and removed
/// while an endpoint still exceeds d, unless the removal would leave a
/// city with degree < 2 or disconnect the graph. Throws GraphError when
/// the degree bound cannot be met.
TspGraph random_euclidean_graph(std::size_t cities, std::size_t d, std::uint64_t seed,
                                const GeneratorOptions& options = {});

}  // namespace gqtsp::tsp
