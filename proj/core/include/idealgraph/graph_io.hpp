// Copyright 2026 The idealgraph Authors
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

// DOT and JSON serialization of inclusion ideal graphs and strong
// resolving graphs.
//
// Graph JSON:
//   {"spec": [int], "vertices": [[int]], "edges": [[int, int]]}
// Strong resolving graph JSON adds
//   "base_spec": [int]      same as spec
//   "vertex_map": [int]     base-graph vertex id of each listed vertex
// Vertices are in lexicographic order; edges are sorted by (min, max).

#ifndef IDEALGRAPH_GRAPH_IO_HPP_
#define IDEALGRAPH_GRAPH_IO_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "idealgraph/inclusion_graph.hpp"
#include "idealgraph/strong.hpp"

namespace idealgraph {

std::string to_dot(const IdealGraph& graph);
std::string to_dot(const StrongResolvingGraph& srg, const IdealGraph& base);

std::string to_json(const IdealGraph& graph);
std::string to_json(const StrongResolvingGraph& srg, const IdealGraph& base);

/// Parsed form of either JSON document.
struct GraphDocument {
  std::vector<int> spec;
  std::vector<IdealVector> vertices;
  std::vector<Edge> edges;
  std::optional<std::vector<VertexId>> vertex_map;

  /// Symmetric adjacency matrix over `vertices`.
  std::vector<std::vector<bool>> adjacency() const;
};

/// Throws Error(kMalformedDocument) when the text does not follow the
/// schema above.
GraphDocument parse_graph_json(std::string_view text);

}  // namespace idealgraph

#endif  // IDEALGRAPH_GRAPH_IO_HPP_
