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

#include <filesystem>
#include <string>
#include <string_view>

#include "gqtsp/tsp/graph.hpp"

namespace gqtsp::tsp {

/// JSON graph document, version 1:
///
///   {"format": "gqtsp-graph", "version": 1, "N": 4, "d": 3,
///    "coords": [[x, y], ...],            // optional
///    "edges": [[i, j, cost], ...]}       // i < j, absent edges omitted
///
/// Numbers are written with round-trip precision, so reading a written
/// graph reproduces it exactly.
std::string graph_to_json(const TspGraph& graph);
TspGraph graph_from_json(std::string_view text);

void write_graph_file(const std::filesystem::path& path, const TspGraph& graph);
TspGraph read_graph_file(const std::filesystem::path& path);

}  // namespace gqtsp::tsp
