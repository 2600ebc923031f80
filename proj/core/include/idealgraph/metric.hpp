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

// Resolving sets and metric dimension of inclusion ideal graphs.

#ifndef IDEALGRAPH_METRIC_HPP_
#define IDEALGRAPH_METRIC_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "idealgraph/inclusion_graph.hpp"
#include "idealgraph/ring_model.hpp"
#include "idealgraph/scope.hpp"

namespace idealgraph {

/// Distances from one vertex to each landmark, in landmark order.
using RepresentationVector = std::vector<unsigned>;

/// Throws Error(kVertexInSet) when `v` is itself a landmark and
/// Error(kDisconnected) when some landmark is unreachable from `v`.
RepresentationVector representation(VertexId v,
                                    std::span<const VertexId> landmarks,
                                    const DistanceMatrix& distances);

/// True iff the vertices outside `landmarks` have pairwise distinct
/// representation vectors. Throws Error(kDisconnected).
bool is_resolving(std::span<const VertexId> landmarks,
                  const DistanceMatrix& distances);

struct ResolvingResult {
  std::size_t dimension = 0;
  /// Lexicographically smallest minimum resolving set, ascending.
  std::vector<VertexId> basis;
  std::uint64_t steps = 0;
};

/// Exact metric dimension. Equivalent to scanning k-subsets in
/// lexicographic order for k = 1, 2, ... and returning the first resolving
/// one; the scan is pruned with a hitting-set branch-and-bound so that
/// graphs with a few hundred vertices stay tractable.
ResolvingResult metric_dimension_exact(const IdealGraph& graph,
                                       const DistanceMatrix& distances,
                                       const SearchBudget& budget = {});
ResolvingResult metric_dimension_exact(const IdealGraph& graph,
                                       const SearchBudget& budget = {});

/// Closed-form metric dimension for the covered ring families. Throws
/// Error(kSpecOutOfTheoremScope) for a single component, two fields, or
/// two or more chain rings together with one or two fields.
std::size_t predicted_metric_dimension(const RingSpec& spec);

/// The constructive resolving set that accompanies each closed form.
/// Same coverage and errors as predicted_metric_dimension.
std::vector<IdealVector> predicted_basis(const RingSpec& spec);

}  // namespace idealgraph

#endif  // IDEALGRAPH_METRIC_HPP_
