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

// The inclusion ideal graph: non-trivial ideals as vertices, an edge
// whenever one ideal properly contains the other.

#ifndef IDEALGRAPH_INCLUSION_GRAPH_HPP_
#define IDEALGRAPH_INCLUSION_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "idealgraph/bitset.hpp"
#include "idealgraph/ring_model.hpp"

namespace idealgraph {

using VertexId = std::size_t;
using Edge = std::pair<VertexId, VertexId>;

class IdealGraph {
 public:
  const RingSpec& spec() const { return spec_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  const std::vector<IdealVector>& vertices() const { return vertices_; }
  const IdealVector& vertex(VertexId v) const { return vertices_.at(v); }

  /// Vertex id of `ideal`, or nullopt if it is not a non-trivial ideal of
  /// this ring. Binary search over the lexicographic vertex list.
  std::optional<VertexId> index_of(const IdealVector& ideal) const;
  /// As index_of, but throws Error(kInvalidVertex).
  VertexId require_index(const IdealVector& ideal) const;

  bool adjacent(VertexId u, VertexId v) const { return rows_[u].test(v); }
  const DynamicBitset& neighbor_set(VertexId v) const { return rows_[v]; }
  const std::vector<VertexId>& neighbors(VertexId v) const { return lists_[v]; }
  std::size_t degree(VertexId v) const { return lists_[v].size(); }

  std::size_t edge_count() const;
  /// Sorted by (min index, max index).
  std::vector<Edge> edges() const;

 private:
  friend IdealGraph build_graph(const RingSpec& spec);
  explicit IdealGraph(RingSpec spec) : spec_(std::move(spec)) {}

  RingSpec spec_;
  std::vector<IdealVector> vertices_;
  std::vector<DynamicBitset> rows_;
  std::vector<std::vector<VertexId>> lists_;
};

IdealGraph build_graph(const RingSpec& spec);

/// Hop distances between every pair of vertices. Unreachable pairs carry
/// no value; callers see std::nullopt rather than a sentinel.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;

  std::size_t size() const { return n_; }
  std::optional<unsigned> at(VertexId u, VertexId v) const {
    const auto d = cells_[u * n_ + v];
    if (d == kUnreachable) return std::nullopt;
    return d;
  }
  bool reachable(VertexId u, VertexId v) const {
    return cells_[u * n_ + v] != kUnreachable;
  }
  /// Finite distance; throws Error(kDisconnected) for unreachable pairs.
  unsigned hops(VertexId u, VertexId v) const;
  /// Finite distance without the reachability check. Only valid on a
  /// connected matrix.
  unsigned hops_unchecked(VertexId u, VertexId v) const {
    return cells_[u * n_ + v];
  }
  bool connected() const { return connected_; }
  /// Throws Error(kDisconnected) unless connected().
  void require_connected() const;

 private:
  friend DistanceMatrix all_pairs_distances(const IdealGraph& graph);
  static constexpr std::uint16_t kUnreachable = 0xFFFF;

  std::size_t n_ = 0;
  bool connected_ = true;
  std::vector<std::uint16_t> cells_;
};

/// One breadth-first search per source vertex.
DistanceMatrix all_pairs_distances(const IdealGraph& graph);

bool is_connected(const IdealGraph& graph);

/// Largest finite distance. Throws Error(kDisconnected) or
/// Error(kEmptyGraph); a single vertex has diameter 0.
unsigned diameter(const IdealGraph& graph);
unsigned diameter(const DistanceMatrix& distances);

}  // namespace idealgraph

#endif  // IDEALGRAPH_INCLUSION_GRAPH_HPP_
