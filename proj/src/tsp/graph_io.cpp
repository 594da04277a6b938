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

#include "gqtsp/tsp/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace gqtsp::tsp {

using nlohmann::json;

std::string graph_to_json(const TspGraph& graph) {
  json doc;
  doc["format"] = "gqtsp-graph";
  doc["version"] = 1;
  doc["N"] = graph.size();
  doc["d"] = graph.sparsity();
  if (graph.coordinates()) doc["coords"] = *graph.coordinates();
  json edges = json::array();
  for (std::size_t i = 0; i < graph.size(); ++i) {
    for (std::size_t j = i + 1; j < graph.size(); ++j) {
      if (graph.has_edge(i, j)) edges.push_back(json::array({i, j, graph.cost(i, j)}));
    }
  }
  doc["edges"] = std::move(edges);
  return doc.dump(2) + "\n";
}

TspGraph graph_from_json(std::string_view text) {
  try {
    const json doc = json::parse(text);
    if (doc.at("format") != "gqtsp-graph" || doc.at("version") != 1) {
      throw GraphError("not a version 1 gqtsp graph document");
    }
    TspGraph g(doc.at("N").get<std::size_t>());
    for (const json& e : doc.at("edges")) {
      if (!e.is_array() || e.size() != 3) throw GraphError("edge must be [i, j, cost]");
      g.set_edge(e[0].get<std::size_t>(), e[1].get<std::size_t>(), e[2].get<double>());
    }
    if (doc.contains("coords")) {
      g.set_coordinates(doc["coords"].get<std::vector<std::array<double, 2>>>());
    }
    g.set_sparsity(doc.at("d").get<std::size_t>());
    g.validate();
    return g;
  } catch (const json::exception& e) {
    throw GraphError(std::string("malformed graph document: ") + e.what());
  }
}

void write_graph_file(const std::filesystem::path& path, const TspGraph& graph) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw GraphError("cannot write " + path.string());
  out << graph_to_json(graph);
  if (!out) throw GraphError("failed writing " + path.string());
}

TspGraph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GraphError("cannot read " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return graph_from_json(text.str());
}

}  // namespace gqtsp::tsp
