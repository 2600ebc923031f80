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

#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "../support/error_matchers.hpp"

namespace idealgraph {
namespace {

std::size_t count_of(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = text.find(needle); p != std::string::npos;
       p = text.find(needle, p + 1)) {
    ++n;
  }
  return n;
}

TEST(Dot, TwoFieldsHasNodesNoEdges) {
  const std::string dot = to_dot(build_graph(RingSpec{0, 0}));
  EXPECT_EQ(dot.rfind("graph ", 0), 0u);
  EXPECT_EQ(count_of(dot, "[label="), 2u);
  EXPECT_EQ(count_of(dot, " -- "), 0u);
}

TEST(Dot, LabelsUseComponentNotation) {
  const std::string dot = to_dot(build_graph(RingSpec{0, 2, 1}));
  EXPECT_NE(dot.find("\"0xI2xR\""), std::string::npos);
  EXPECT_NE(dot.find("\"Fx0x0\""), std::string::npos);
}

TEST(Json, ThreeFieldsSchema) {
  const auto j = nlohmann::json::parse(to_json(build_graph(RingSpec{0, 0, 0})));
  EXPECT_EQ(j.at("spec"), nlohmann::json({0, 0, 0}));
  EXPECT_EQ(j.at("vertices").size(), 6u);
  EXPECT_EQ(j.at("edges").size(), 6u);
  EXPECT_EQ(j.at("vertices")[0], nlohmann::json({0, 0, 1}));
  for (const auto& e : j.at("edges")) EXPECT_LT(e[0].get<int>(), e[1].get<int>());
}

TEST(Json, RoundTripReproducesAdjacency) {
  for (const RingSpec& spec :
       {RingSpec{0, 0, 0}, RingSpec{0, 0, 0, 0}, RingSpec{2, 1}, RingSpec{1, 0, 0},
        RingSpec{0, 0}}) {
    const IdealGraph g = build_graph(spec);
    const GraphDocument doc = parse_graph_json(to_json(g));
    EXPECT_EQ(doc.spec, spec.chain_lengths());
    ASSERT_EQ(doc.vertices, g.vertices());
    EXPECT_EQ(doc.edges, g.edges());
    EXPECT_FALSE(doc.vertex_map.has_value());
    const auto adj = doc.adjacency();
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        EXPECT_EQ(adj[u][v], g.adjacent(u, v));
      }
    }
  }
}

TEST(Json, SrgCarriesVertexMap) {
  const IdealGraph g = build_graph(RingSpec{1, 0});
  const StrongResolvingGraph srg = build_srg_definitional(g, all_pairs_distances(g));
  const GraphDocument doc = parse_graph_json(to_json(srg, g));
  ASSERT_TRUE(doc.vertex_map.has_value());
  EXPECT_EQ(*doc.vertex_map, srg.base_vertices());
  EXPECT_EQ(doc.vertices.size(), srg.vertex_count());
  EXPECT_EQ(doc.edges.size(), srg.edge_count());
  const auto j = nlohmann::json::parse(to_json(srg, g));
  EXPECT_EQ(j.at("base_spec"), nlohmann::json({1, 0}));
}

TEST(Json, SrgDot) {
  const IdealGraph g = build_graph(RingSpec{0, 0, 0});
  const StrongResolvingGraph srg = build_srg_definitional(g, all_pairs_distances(g));
  EXPECT_EQ(count_of(to_dot(srg, g), " -- "), 3u);
}

TEST(Json, MalformedDocuments) {
  EXPECT_ERROR_CODE(parse_graph_json("not json"), ErrorCode::kMalformedDocument);
  EXPECT_ERROR_CODE(parse_graph_json("[1,2]"), ErrorCode::kMalformedDocument);
  EXPECT_ERROR_CODE(parse_graph_json(R"({"spec":[0]})"), ErrorCode::kMalformedDocument);
  EXPECT_ERROR_CODE(
      parse_graph_json(R"({"spec":[0,0],"vertices":[[0,1]],"edges":[[0,1]]})"),
      ErrorCode::kMalformedDocument);
  EXPECT_ERROR_CODE(
      parse_graph_json(R"({"spec":[0,0],"vertices":[[0,1,1]],"edges":[]})"),
      ErrorCode::kMalformedDocument);
  EXPECT_ERROR_CODE(
      parse_graph_json(R"({"spec":[0,0],"vertices":[[0,1],[1,0]],"edges":[[0]]})"),
      ErrorCode::kMalformedDocument);
  EXPECT_ERROR_CODE(
      parse_graph_json(R"({"spec":"x","vertices":[],"edges":[]})"),
      ErrorCode::kMalformedDocument);
}

}  // namespace
}  // namespace idealgraph
