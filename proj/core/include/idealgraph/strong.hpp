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

// Strong resolving graphs and strong metric dimension.
//
// Two vertices are mutually maximally distant (MMD) when no neighbour of
// either one is farther from the other. The strong resolving graph keeps
// the vertices that have an MMD partner and joins exactly the MMD pairs.
// The strong metric dimension equals the vertex cover number of that graph,
// which is its order minus its independence number.

#ifndef IDEALGRAPH_STRONG_HPP_
#define IDEALGRAPH_STRONG_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "idealgraph/independent_set.hpp"
#include "idealgraph/inclusion_graph.hpp"
#include "idealgraph/metric.hpp"
#include "idealgraph/ring_model.hpp"
#include "idealgraph/scope.hpp"

namespace idealgraph {

class StrongResolvingGraph {
 public:
  /// `base_vertices` must be ascending; `graph` is indexed by position in it.
  StrongResolvingGraph(RingSpec base_spec, std::vector<VertexId> base_vertices,
                       SimpleGraph graph);

  const RingSpec& base_spec() const { return base_spec_; }
  std::size_t vertex_count() const { return base_vertices_.size(); }
  const std::vector<VertexId>& base_vertices() const { return base_vertices_; }
  VertexId base_vertex(std::size_t local) const { return base_vertices_.at(local); }
  std::optional<std::size_t> local_index(VertexId base) const;
  const SimpleGraph& graph() const { return graph_; }

  std::size_t edge_count() const { return graph_.edge_count(); }
  /// Edges in base-graph vertex ids, sorted.
  std::vector<Edge> base_edges() const;

  friend bool operator==(const StrongResolvingGraph&,
                         const StrongResolvingGraph&) = default;

 private:
  RingSpec base_spec_;
  std::vector<VertexId> base_vertices_;
  SimpleGraph graph_;
};

/// Throws Error(kDisconnected) on a disconnected graph and
/// Error(kInvalidVertex) when u == v.
bool mutually_maximally_distant(VertexId u, VertexId v, const IdealGraph& graph,
                                const DistanceMatrix& distances);

/// Pairwise MMD test over all vertex pairs.
StrongResolvingGraph build_srg_definitional(const IdealGraph& graph,
                                            const DistanceMatrix& distances);

/// Builds the strong resolving graph from the ideal-level rules that hold
/// for field products, chain-ring products and mixed products, without
/// computing any distance. Throws Error(kSpecOutOfTheoremScope) otherwise.
///
/// Rules, with X^c the complement and ~ adjacency in the inclusion graph:
///   both extremal        X = Y^c, or X !~ Y and X !~ Y^c
///   neither extremal     X !~ Y
///   X not extremal only  X !~ Y and X !~ Y^c
/// With exactly one chain ring of length k at slot p, the vertices
/// I_1 x 0 x ... x 0 and I_k x F x ... x F have no MMD partner and are
/// left out.
StrongResolvingGraph build_srg_structural(const IdealGraph& graph);

struct SrgStructureReport {
  std::size_t k2_count = 0;
  /// Vertices outside the K2 components.
  std::size_t h_vertices = 0;
  /// Whether those vertices form one connected component; nullopt when
  /// there are none.
  std::optional<bool> h_connected;
  /// Components as ascending base vertex ids, ordered by smallest member.
  std::vector<std::vector<VertexId>> components;
};

SrgStructureReport srg_structure(const StrongResolvingGraph& srg);

/// Exact independence number; the witness is in base vertex ids.
IndependentSetResult independence_number(const StrongResolvingGraph& srg,
                                         const SearchBudget& budget = {});

struct StrongDimensionResult {
  std::size_t dimension = 0;
  std::size_t srg_vertices = 0;
  std::size_t independence = 0;
  std::vector<VertexId> independent_set;  // base ids
  std::vector<VertexId> vertex_cover;     // base ids, a strong metric basis
};

/// |V(SRG)| - beta(SRG) on the definitional strong resolving graph.
StrongDimensionResult strong_metric_dimension(const IdealGraph& graph,
                                              const DistanceMatrix& distances,
                                              const SearchBudget& budget = {});
StrongDimensionResult strong_metric_dimension(const StrongResolvingGraph& srg,
                                              const SearchBudget& budget = {});

/// Some w in `set` has d(w,u) = d(w,v) + d(v,u) or d(w,v) = d(w,u) + d(u,v)
/// for every pair u != v. Throws Error(kDisconnected).
bool is_strong_resolving_set(std::span<const VertexId> set,
                             const DistanceMatrix& distances);

struct StrongOracleOptions {
  std::size_t max_vertices = 16;
};

/// Brute force over subsets in ascending size, lexicographic within a size.
/// Throws Error(kBudgetExceeded) above `max_vertices`.
ResolvingResult strong_metric_dimension_oracle(
    const DistanceMatrix& distances, const StrongOracleOptions& options = {});

/// Closed forms; all throw Error(kSpecOutOfTheoremScope) outside the field,
/// chain-product and mixed families.
std::size_t predicted_beta(const RingSpec& spec);
std::size_t predicted_sdim(const RingSpec& spec);
std::size_t predicted_srg_vertex_count(const RingSpec& spec);

/// Explicit independent set of size predicted_beta(spec) in the strong
/// resolving graph: nested or staircase ideals plus one endpoint of every
/// K2 component.
std::vector<IdealVector> predicted_max_independent_set(const RingSpec& spec);

}  // namespace idealgraph

#endif  // IDEALGRAPH_STRONG_HPP_
