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

#include "idealgraph/graph_io.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

#include "idealgraph/errors.hpp"

namespace idealgraph {

using nlohmann::json;

namespace {

void write_dot(std::ostream& os, std::string_view name, const RingSpec& spec,
               const std::vector<IdealVector>& vertices,
               const std::vector<Edge>& edges) {
  os << "graph \"" << name << "\" {\n";
  os << "  label=\"" << spec.to_string() << "\";\n";
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    os << "  v" << v << " [label=\"" << render_ideal(spec, vertices[v], "x")
       << "\"];\n";
  }
  for (const auto& [u, v] : edges) os << "  v" << u << " -- v" << v << ";\n";
  os << "}\n";
}

json vertex_array(const std::vector<IdealVector>& vertices) {
  json out = json::array();
  for (const auto& v : vertices) out.push_back(v.levels());
  return out;
}

json edge_array(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const auto& [u, v] : edges) out.push_back({u, v});
  return out;
}

std::vector<IdealVector> srg_vertices(const StrongResolvingGraph& srg,
                                      const IdealGraph& base) {
  std::vector<IdealVector> out;
  for (VertexId b : srg.base_vertices()) out.push_back(base.vertex(b));
  return out;
}

std::vector<Edge> local_edges(const StrongResolvingGraph& srg) {
  std::vector<Edge> out;
  for (const auto& [u, v] : srg.graph().edges()) out.emplace_back(u, v);
  return out;
}

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::kMalformedDocument, "graph document: " + what);
}

}  // namespace

std::string to_dot(const IdealGraph& graph) {
  std::ostringstream os;
  write_dot(os, "In", graph.spec(), graph.vertices(), graph.edges());
  return os.str();
}

std::string to_dot(const StrongResolvingGraph& srg, const IdealGraph& base) {
  std::ostringstream os;
  write_dot(os, "In_SR", srg.base_spec(), srg_vertices(srg, base),
            local_edges(srg));
  return os.str();
}

std::string to_json(const IdealGraph& graph) {
  json doc;
  doc["spec"] = graph.spec().chain_lengths();
  doc["vertices"] = vertex_array(graph.vertices());
  doc["edges"] = edge_array(graph.edges());
  return doc.dump();
}

std::string to_json(const StrongResolvingGraph& srg, const IdealGraph& base) {
  json doc;
  doc["spec"] = srg.base_spec().chain_lengths();
  doc["base_spec"] = srg.base_spec().chain_lengths();
  doc["vertices"] = vertex_array(srg_vertices(srg, base));
  doc["vertex_map"] = srg.base_vertices();
  doc["edges"] = edge_array(local_edges(srg));
  return doc.dump();
}

std::vector<std::vector<bool>> GraphDocument::adjacency() const {
  std::vector<std::vector<bool>> adj(vertices.size(),
                                     std::vector<bool>(vertices.size(), false));
  for (const auto& [u, v] : edges) adj[u][v] = adj[v][u] = true;
  return adj;
}

GraphDocument parse_graph_json(std::string_view text) {
  json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_object()) malformed("not a JSON object");
  GraphDocument out;
  try {
    out.spec = doc.at("spec").get<std::vector<int>>();
    for (const auto& v : doc.at("vertices")) {
      auto levels = v.get<std::vector<int>>();
      if (levels.size() != out.spec.size()) malformed("vertex length mismatch");
      out.vertices.emplace_back(std::move(levels));
    }
    for (const auto& e : doc.at("edges")) {
      if (!e.is_array() || e.size() != 2) malformed("edge is not a pair");
      const auto u = e[0].get<VertexId>();
      const auto v = e[1].get<VertexId>();
      if (u >= out.vertices.size() || v >= out.vertices.size() || u == v) {
        malformed("edge endpoint out of range");
      }
      out.edges.emplace_back(u, v);
    }
    if (doc.contains("vertex_map")) {
      out.vertex_map = doc.at("vertex_map").get<std::vector<VertexId>>();
      if (out.vertex_map->size() != out.vertices.size()) {
        malformed("vertex_map length mismatch");
      }
    }
  } catch (const json::exception& e) {
    malformed(e.what());
  }
  return out;
}

}  // namespace idealgraph
