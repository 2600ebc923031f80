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

#include "idealgraph/independent_set.hpp"

#include <gtest/gtest.h>

#include <random>

#include "../support/error_matchers.hpp"
#include "../support/oracles.hpp"

namespace idealgraph {
namespace {

oracle::Matrix to_matrix(const SimpleGraph& g) {
  oracle::Matrix m(g.vertex_count(), std::vector<int>(g.vertex_count(), 0));
  for (const auto& [u, v] : g.edges()) m[u][v] = m[v][u] = 1;
  return m;
}

SimpleGraph cycle(std::size_t n) {
  SimpleGraph g(n);
  for (std::size_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

TEST(SimpleGraph, Basics) {
  SimpleGraph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 0);
  g.add_edge(2, 3);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_TRUE(g.adjacent(1, 0));
  EXPECT_EQ(g.degree(1), 1u);
  EXPECT_EQ(g.edges(), (std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {2, 3}}));
  EXPECT_ERROR_CODE(g.add_edge(2, 2), ErrorCode::kInvalidVertex);
  EXPECT_ERROR_CODE(g.add_edge(0, 4), ErrorCode::kInvalidVertex);
}

TEST(MaximumIndependentSet, EdgelessGraph) {
  const auto r = maximum_independent_set(SimpleGraph(7));
  EXPECT_EQ(r.size, 7u);
  EXPECT_EQ(r.witness.size(), 7u);
}

TEST(MaximumIndependentSet, EmptyGraph) {
  EXPECT_EQ(maximum_independent_set(SimpleGraph(0)).size, 0u);
}

TEST(MaximumIndependentSet, Cycles) {
  for (std::size_t n = 3; n <= 12; ++n) {
    EXPECT_EQ(maximum_independent_set(cycle(n)).size, n / 2) << n;
  }
}

TEST(MaximumIndependentSet, CompleteGraph) {
  SimpleGraph g(6);
  for (std::size_t u = 0; u < 6; ++u) {
    for (std::size_t v = u + 1; v < 6; ++v) g.add_edge(u, v);
  }
  EXPECT_EQ(maximum_independent_set(g).size, 1u);
}

TEST(MaximumIndependentSet, RandomGraphsAgainstExhaustiveSearch) {
  std::mt19937 rng(20260117);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 4 + rng() % 15;
    const double p = 0.1 + 0.8 * (rng() % 100) / 100.0;
    std::bernoulli_distribution edge(p);
    SimpleGraph g(n);
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) {
        if (edge(rng)) g.add_edge(u, v);
      }
    }
    const auto r = maximum_independent_set(g);
    EXPECT_EQ(r.size, oracle::independence_number(to_matrix(g))) << trial;
    EXPECT_EQ(r.witness.size(), r.size);
    EXPECT_TRUE(is_independent_set(g, r.witness));
    EXPECT_TRUE(std::is_sorted(r.witness.begin(), r.witness.end()));
    EXPECT_TRUE(is_vertex_cover(g, complement_of(n, r.witness)));
  }
}

TEST(MaximumIndependentSet, Budget) {
  std::mt19937 rng(7);
  std::bernoulli_distribution edge(0.3);
  SimpleGraph g(60);
  for (std::size_t u = 0; u < 60; ++u) {
    for (std::size_t v = u + 1; v < 60; ++v) {
      if (edge(rng)) g.add_edge(u, v);
    }
  }
  EXPECT_ERROR_CODE(maximum_independent_set(g, SearchBudget{10}),
                    ErrorCode::kBudgetExceeded);
}

TEST(IndependentSetChecks, Predicates) {
  const SimpleGraph g = cycle(5);
  const std::vector<std::size_t> ok{0, 2};
  const std::vector<std::size_t> bad{0, 1};
  EXPECT_TRUE(is_independent_set(g, ok));
  EXPECT_FALSE(is_independent_set(g, bad));
  const std::vector<std::size_t> cover{1, 3, 4};
  EXPECT_TRUE(is_vertex_cover(g, cover));
  EXPECT_FALSE(is_vertex_cover(g, ok));
  EXPECT_EQ(complement_of(5, ok), (std::vector<std::size_t>{1, 3, 4}));
}

}  // namespace
}  // namespace idealgraph
