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

#ifndef IDEALGRAPH_INDEPENDENT_SET_HPP_
#define IDEALGRAPH_INDEPENDENT_SET_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "idealgraph/bitset.hpp"
#include "idealgraph/scope.hpp"

namespace idealgraph {

// Undirected simple graph on vertices 0..n-1 with bitset rows.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::size_t n) : rows_(n, DynamicBitset(n)) {}

  std::size_t vertex_count() const { return rows_.size(); }
  void add_edge(std::size_t u, std::size_t v);
  bool adjacent(std::size_t u, std::size_t v) const { return rows_[u].test(v); }
  const DynamicBitset& neighbor_set(std::size_t v) const { return rows_[v]; }
  std::size_t degree(std::size_t v) const { return rows_[v].count(); }
  std::size_t edge_count() const;
  /// (u, v) with u < v, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  std::vector<DynamicBitset> rows_;
};

struct IndependentSetResult {
  std::size_t size = 0;
  std::vector<std::size_t> witness;  // ascending
  std::uint64_t steps = 0;
};

/// Exact maximum independent set by branch and bound: max-degree pivot,
/// include/exclude branching, greedy clique-cover upper bound and a greedy
/// initial solution. Throws Error(kBudgetExceeded).
IndependentSetResult maximum_independent_set(const SimpleGraph& graph,
                                             const SearchBudget& budget = {});

bool is_independent_set(const SimpleGraph& graph,
                        std::span<const std::size_t> set);
bool is_vertex_cover(const SimpleGraph& graph,
                     std::span<const std::size_t> set);

/// Vertices of 0..n-1 not in `set`, ascending.
std::vector<std::size_t> complement_of(std::size_t n,
                                       std::span<const std::size_t> set);

}  // namespace idealgraph

#endif  // IDEALGRAPH_INDEPENDENT_SET_HPP_
