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

#include <algorithm>
#include <deque>

#include "idealgraph/errors.hpp"

namespace idealgraph {

std::optional<VertexId> IdealGraph::index_of(const IdealVector& ideal) const {
  const auto it = std::lower_bound(vertices_.begin(), vertices_.end(), ideal);
  if (it == vertices_.end() || *it != ideal) return std::nullopt;
  return static_cast<VertexId>(it - vertices_.begin());
}

VertexId IdealGraph::require_index(const IdealVector& ideal) const {
  if (auto id = index_of(ideal)) return *id;
  throw Error(ErrorCode::kInvalidVertex,
              "not a vertex of In(" + spec_.to_string() + "): " +
                  render_ideal(spec_, ideal, "x"));
}

std::size_t IdealGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& l : lists_) twice += l.size();
  return twice / 2;
}

std::vector<Edge> IdealGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (VertexId u = 0; u < lists_.size(); ++u) {
    for (VertexId v : lists_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

IdealGraph build_graph(const RingSpec& spec) {
  IdealGraph g(spec);
  g.vertices_ = enumerate_ideals(spec);
  const std::size_t n = g.vertices_.size();
  g.rows_.assign(n, DynamicBitset(n));
  g.lists_.assign(n, {});
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (properly_contains(g.vertices_[u], g.vertices_[v]) ||
          properly_contains(g.vertices_[v], g.vertices_[u])) {
        g.rows_[u].set(v);
        g.rows_[v].set(u);
      }
    }
  }
  for (VertexId u = 0; u < n; ++u) {
    g.rows_[u].for_each([&](std::size_t v) { g.lists_[u].push_back(v); });
  }
  return g;
}

unsigned DistanceMatrix::hops(VertexId u, VertexId v) const {
  const auto d = cells_.at(u * n_ + v);
  if (d == kUnreachable) {
    throw Error(ErrorCode::kDisconnected,
                "vertices " + std::to_string(u) + " and " + std::to_string(v) +
                    " are in different components");
  }
  return d;
}

void DistanceMatrix::require_connected() const {
  if (!connected_) {
    throw Error(ErrorCode::kDisconnected, "graph is disconnected");
  }
}

DistanceMatrix all_pairs_distances(const IdealGraph& graph) {
  DistanceMatrix dm;
  const std::size_t n = graph.vertex_count();
  dm.n_ = n;
  dm.cells_.assign(n * n, DistanceMatrix::kUnreachable);
  std::deque<VertexId> queue;
  for (VertexId s = 0; s < n; ++s) {
    std::uint16_t* row = dm.cells_.data() + s * n;
    row[s] = 0;
    queue.assign(1, s);
    while (!queue.empty()) {
      const VertexId u = queue.front();
      queue.pop_front();
      for (VertexId w : graph.neighbors(u)) {
        if (row[w] == DistanceMatrix::kUnreachable) {
          row[w] = static_cast<std::uint16_t>(row[u] + 1);
          queue.push_back(w);
        }
      }
    }
  }
  dm.connected_ = std::find(dm.cells_.begin(), dm.cells_.end(),
                            DistanceMatrix::kUnreachable) == dm.cells_.end();
  return dm;
}

bool is_connected(const IdealGraph& graph) {
  const std::size_t n = graph.vertex_count();
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::vector<VertexId> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const VertexId u = stack.back();
    stack.pop_back();
    for (VertexId w : graph.neighbors(u)) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

unsigned diameter(const DistanceMatrix& distances) {
  const std::size_t n = distances.size();
  if (n == 0) throw Error(ErrorCode::kEmptyGraph, "graph has no vertices");
  distances.require_connected();
  unsigned best = 0;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      best = std::max(best, distances.hops_unchecked(u, v));
    }
  }
  return best;
}

unsigned diameter(const IdealGraph& graph) {
  return diameter(all_pairs_distances(graph));
}

}  // namespace idealgraph
