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

#include "idealgraph/inclusion_graph.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "../support/error_matchers.hpp"
#include "../support/figures.hpp"
#include "../support/oracles.hpp"

namespace idealgraph {
namespace {

std::vector<std::vector<int>> small_specs() {
  return {{0, 0, 0},    {0, 0, 0, 0}, {0, 0, 0, 0, 0}, {1, 1},    {2, 1},
          {3, 3},       {1, 2, 1},    {1, 0},          {2, 0, 0}, {1, 1, 0},
          {2, 1, 0, 0}, {0, 0},       {3},             {1, 0, 0, 0}};
}

TEST(BuildGraph, ThreeFieldsIsSixCycle) {
  const IdealGraph g = build_graph(RingSpec{0, 0, 0});
  ASSERT_EQ(g.vertex_count(), 6u);
  EXPECT_EQ(g.edge_count(), 6u);
  for (VertexId v = 0; v < 6; ++v) EXPECT_EQ(g.degree(v), 2u);
  EXPECT_TRUE(is_connected(g));
  EXPECT_EQ(diameter(g), 3u);
  for (const auto& [a, b] : figures::kThreeFieldCycle) {
    EXPECT_TRUE(g.adjacent(g.require_index(a), g.require_index(b)));
  }
}

TEST(BuildGraph, FourFieldsMatchesReferenceDrawing) {
  const IdealGraph g = build_graph(RingSpec{0, 0, 0, 0});
  ASSERT_EQ(g.vertex_count(), 14u);
  std::set<Edge> want;
  for (const auto& [a, b] : figures::kFourFieldEdges) {
    VertexId u = g.require_index(figures::kFourFieldLabels[a - 1]);
    VertexId v = g.require_index(figures::kFourFieldLabels[b - 1]);
    want.insert({std::min(u, v), std::max(u, v)});
  }
  ASSERT_EQ(want.size(), 36u);
  const auto got = g.edges();
  EXPECT_EQ(std::set<Edge>(got.begin(), got.end()), want);
}

TEST(BuildGraph, ChainTimesFieldIsPath) {
  // (0,F) - (I,F) - (I,0) - (R,0)
  const IdealGraph g = build_graph(RingSpec{1, 0});
  ASSERT_EQ(g.vertex_count(), 4u);
  EXPECT_EQ(g.edge_count(), 3u);
  const VertexId a = g.require_index({0, 1}), b = g.require_index({1, 1}),
                 c = g.require_index({1, 0}), d = g.require_index({2, 0});
  EXPECT_TRUE(g.adjacent(a, b));
  EXPECT_TRUE(g.adjacent(b, c));
  EXPECT_TRUE(g.adjacent(c, d));
  EXPECT_FALSE(g.adjacent(a, c));
  EXPECT_FALSE(g.adjacent(a, d));
  EXPECT_FALSE(g.adjacent(b, d));
}

TEST(BuildGraph, AdjacencyIsStrictComparability) {
  for (const auto& n : small_specs()) {
    const IdealGraph g = build_graph(RingSpec(n));
    const auto adj = oracle::adjacency(n);
    ASSERT_EQ(g.vertex_count(), adj.size());
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
      EXPECT_EQ(g.degree(u), g.neighbors(u).size());
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const bool comparable = properly_contains(g.vertex(u), g.vertex(v)) ||
                                properly_contains(g.vertex(v), g.vertex(u));
        ASSERT_EQ(g.adjacent(u, v), comparable);
        ASSERT_EQ(g.adjacent(u, v), adj[u][v] == 1);
      }
    }
  }
}

TEST(BuildGraph, EdgesSorted) {
  const auto edges = build_graph(RingSpec{2, 1, 0}).edges();
  EXPECT_TRUE(std::is_sorted(edges.begin(), edges.end()));
  for (const auto& [u, v] : edges) EXPECT_LT(u, v);
}

TEST(BuildGraph, IndexLookup) {
  const IdealGraph g = build_graph(RingSpec{1, 0});
  EXPECT_EQ(g.index_of({0, 0}), std::nullopt);
  EXPECT_EQ(g.index_of({2, 1}), std::nullopt);
  EXPECT_EQ(g.index_of({5, 5}), std::nullopt);
  EXPECT_ERROR_CODE(g.require_index({0, 0}), ErrorCode::kInvalidVertex);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    EXPECT_EQ(g.index_of(g.vertex(v)), v);
  }
}

TEST(Distances, MatchFloydWarshall) {
  for (const auto& n : small_specs()) {
    const IdealGraph g = build_graph(RingSpec(n));
    const DistanceMatrix d = all_pairs_distances(g);
    const auto fw = oracle::floyd_warshall(oracle::adjacency(n));
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (fw[u][v] == oracle::kInf) {
          EXPECT_EQ(d.at(u, v), std::nullopt);
          EXPECT_FALSE(d.reachable(u, v));
        } else {
          EXPECT_EQ(d.at(u, v), std::optional<unsigned>(fw[u][v]));
        }
      }
    }
  }
}

TEST(Distances, ComplementOfMinimalIdealAtThree) {
  const IdealGraph g = build_graph(RingSpec{0, 0, 0});
  const DistanceMatrix d = all_pairs_distances(g);
  EXPECT_EQ(d.hops(g.require_index(figures::kX1), g.require_index(figures::kX1c)), 3u);
  for (VertexId v = 0; v < g.vertex_count(); ++v) EXPECT_EQ(d.hops(v, v), 0u);
}

TEST(Distances, TwoFieldsDisconnected) {
  const IdealGraph g = build_graph(RingSpec{0, 0});
  const DistanceMatrix d = all_pairs_distances(g);
  EXPECT_FALSE(d.connected());
  EXPECT_FALSE(is_connected(g));
  EXPECT_EQ(d.at(g.require_index({0, 1}), g.require_index({1, 0})), std::nullopt);
  EXPECT_ERROR_CODE(d.hops(0, 1), ErrorCode::kDisconnected);
  EXPECT_ERROR_CODE(d.require_connected(), ErrorCode::kDisconnected);
  EXPECT_ERROR_CODE(diameter(g), ErrorCode::kDisconnected);
}

TEST(Diameter, Values) {
  EXPECT_EQ(diameter(build_graph(RingSpec{0, 0, 0})), 3u);
  EXPECT_EQ(diameter(build_graph(RingSpec{0, 0, 0, 0, 0})), 3u);
  EXPECT_EQ(diameter(build_graph(RingSpec{2})), 1u);
  EXPECT_EQ(diameter(build_graph(RingSpec{1})), 0u);
}

TEST(Diameter, EmptyMatrixGuard) {
  EXPECT_ERROR_CODE(diameter(build_graph(RingSpec{0})), ErrorCode::kEmptyGraph);
  EXPECT_ERROR_CODE(diameter(DistanceMatrix{}), ErrorCode::kEmptyGraph);
}

TEST(Connectivity, Examples) {
  EXPECT_FALSE(is_connected(build_graph(RingSpec{0, 0})));
  EXPECT_TRUE(is_connected(build_graph(RingSpec{0, 0, 0})));
  EXPECT_TRUE(is_connected(build_graph(RingSpec{1, 1})));
}

}  // namespace
}  // namespace idealgraph
