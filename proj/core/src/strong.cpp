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

#include "idealgraph/strong.hpp"

#include <algorithm>

#include "idealgraph/errors.hpp"
#include "slots.hpp"

namespace idealgraph {

using detail::chain_slots;
using detail::field_slots;
using detail::single_slot;

StrongResolvingGraph::StrongResolvingGraph(RingSpec base_spec,
                                           std::vector<VertexId> base_vertices,
                                           SimpleGraph graph)
    : base_spec_(std::move(base_spec)),
      base_vertices_(std::move(base_vertices)),
      graph_(std::move(graph)) {
  if (graph_.vertex_count() != base_vertices_.size() ||
      !std::is_sorted(base_vertices_.begin(), base_vertices_.end())) {
    throw Error(ErrorCode::kInvalidVertex,
                "strong resolving graph vertex map is inconsistent");
  }
}

std::optional<std::size_t> StrongResolvingGraph::local_index(VertexId base) const {
  const auto it =
      std::lower_bound(base_vertices_.begin(), base_vertices_.end(), base);
  if (it == base_vertices_.end() || *it != base) return std::nullopt;
  return static_cast<std::size_t>(it - base_vertices_.begin());
}

std::vector<Edge> StrongResolvingGraph::base_edges() const {
  std::vector<Edge> out;
  for (const auto& [u, v] : graph_.edges()) {
    out.emplace_back(base_vertices_[u], base_vertices_[v]);
  }
  return out;
}

namespace {

// Restricts to the vertices flagged in `keep` and relabels them densely.
StrongResolvingGraph from_base_relation(const IdealGraph& graph,
                                        const std::vector<bool>& keep,
                                        const std::vector<Edge>& edges) {
  std::vector<VertexId> base;
  std::vector<std::size_t> local(graph.vertex_count(), 0);
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    if (keep[v]) {
      local[v] = base.size();
      base.push_back(v);
    }
  }
  SimpleGraph g(base.size());
  for (const auto& [u, v] : edges) g.add_edge(local[u], local[v]);
  return StrongResolvingGraph(graph.spec(), std::move(base), std::move(g));
}

}  // namespace

bool mutually_maximally_distant(VertexId u, VertexId v, const IdealGraph& graph,
                                const DistanceMatrix& distances) {
  distances.require_connected();
  if (u == v) {
    throw Error(ErrorCode::kInvalidVertex,
                "mutual maximal distance needs two different vertices");
  }
  const unsigned d = distances.hops_unchecked(u, v);
  for (VertexId w : graph.neighbors(u)) {
    if (distances.hops_unchecked(v, w) > d) return false;
  }
  for (VertexId w : graph.neighbors(v)) {
    if (distances.hops_unchecked(u, w) > d) return false;
  }
  return true;
}

StrongResolvingGraph build_srg_definitional(const IdealGraph& graph,
                                            const DistanceMatrix& distances) {
  distances.require_connected();
  const std::size_t n = graph.vertex_count();
  std::vector<bool> keep(n, false);
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (mutually_maximally_distant(u, v, graph, distances)) {
        edges.emplace_back(u, v);
        keep[u] = keep[v] = true;
      }
    }
  }
  return from_base_relation(graph, keep, edges);
}

StrongResolvingGraph build_srg_structural(const IdealGraph& graph) {
  const RingSpec& spec = graph.spec();
  const RingFamily family = classify(spec);
  if (family == RingFamily::kUncovered) {
    out_of_scope(spec, "the strong resolving graph structure");
  }
  const std::size_t n = graph.vertex_count();

  std::vector<bool> keep(n, true);
  if (family == RingFamily::kMixedSingleChain) {
    const std::size_t p = chain_slots(spec).front();
    keep[graph.require_index(single_slot(spec, p, 1))] = false;
    std::vector<int> levels(spec.component_count(), 1);
    levels[p] = spec.chain_length(p);
    keep[graph.require_index(IdealVector(std::move(levels)))] = false;
  }

  std::vector<bool> extremal(n);
  std::vector<std::optional<VertexId>> comp(n);
  for (VertexId v = 0; v < n; ++v) {
    const IdealVector& ideal = graph.vertex(v);
    extremal[v] = is_extremal(spec, ideal);
    if (zero_component_count(ideal) > 0) {
      comp[v] = graph.index_of(complement(spec, ideal));
    }
  }
  // X ~ Y^c in the inclusion graph; an absent complement is never adjacent.
  auto touches_complement = [&](VertexId x, VertexId y) {
    return comp[y].has_value() && graph.adjacent(x, *comp[y]);
  };

  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    if (!keep[u]) continue;
    for (VertexId v = u + 1; v < n; ++v) {
      if (!keep[v]) continue;
      bool edge = false;
      if (extremal[u] && extremal[v]) {
        edge = comp[v] == u ||
               (!graph.adjacent(u, v) && !touches_complement(u, v));
      } else if (!extremal[u] && !extremal[v]) {
        edge = !graph.adjacent(u, v);
      } else {
        const VertexId x = extremal[u] ? v : u;  // the non-extremal one
        const VertexId y = extremal[u] ? u : v;
        edge = !graph.adjacent(x, y) && !touches_complement(x, y);
      }
      if (edge) edges.emplace_back(u, v);
    }
  }
  return from_base_relation(graph, keep, edges);
}

SrgStructureReport srg_structure(const StrongResolvingGraph& srg) {
  const SimpleGraph& g = srg.graph();
  const std::size_t n = g.vertex_count();
  std::vector<bool> seen(n, false);
  SrgStructureReport report;
  std::size_t remainder_components = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> members{s};
    seen[s] = true;
    for (std::size_t i = 0; i < members.size(); ++i) {
      g.neighbor_set(members[i]).for_each([&](std::size_t w) {
        if (!seen[w]) {
          seen[w] = true;
          members.push_back(w);
        }
      });
    }
    std::sort(members.begin(), members.end());
    std::vector<VertexId> base;
    for (std::size_t m : members) base.push_back(srg.base_vertex(m));
    if (members.size() == 2) {
      ++report.k2_count;
    } else {
      report.h_vertices += members.size();
      ++remainder_components;
    }
    report.components.push_back(std::move(base));
  }
  if (remainder_components > 0) report.h_connected = remainder_components == 1;
  return report;
}

IndependentSetResult independence_number(const StrongResolvingGraph& srg,
                                         const SearchBudget& budget) {
  IndependentSetResult r = maximum_independent_set(srg.graph(), budget);
  for (auto& v : r.witness) v = srg.base_vertex(v);
  return r;
}

StrongDimensionResult strong_metric_dimension(const IdealGraph& graph,
                                              const DistanceMatrix& distances,
                                              const SearchBudget& budget) {
  return strong_metric_dimension(build_srg_definitional(graph, distances),
                                 budget);
}

StrongDimensionResult strong_metric_dimension(const StrongResolvingGraph& srg,
                                              const SearchBudget& budget) {
  const IndependentSetResult mis = maximum_independent_set(srg.graph(), budget);
  StrongDimensionResult out;
  out.srg_vertices = srg.vertex_count();
  out.independence = mis.size;
  out.dimension = out.srg_vertices - out.independence;
  for (std::size_t v : mis.witness) out.independent_set.push_back(srg.base_vertex(v));
  for (std::size_t v : complement_of(srg.vertex_count(), mis.witness)) {
    out.vertex_cover.push_back(srg.base_vertex(v));
  }
  return out;
}

namespace {

bool strongly_resolves(VertexId w, VertexId u, VertexId v,
                       const DistanceMatrix& d) {
  const unsigned uv = d.hops_unchecked(u, v);
  return d.hops_unchecked(w, u) == d.hops_unchecked(w, v) + uv ||
         d.hops_unchecked(w, v) == d.hops_unchecked(w, u) + uv;
}

}  // namespace

bool is_strong_resolving_set(std::span<const VertexId> set,
                             const DistanceMatrix& distances) {
  distances.require_connected();
  const std::size_t n = distances.size();
  for (VertexId w : set) {
    if (w >= n) throw Error(ErrorCode::kInvalidVertex, "vertex out of range");
  }
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      const bool hit = std::any_of(set.begin(), set.end(), [&](VertexId w) {
        return strongly_resolves(w, u, v, distances);
      });
      if (!hit) return false;
    }
  }
  return true;
}

ResolvingResult strong_metric_dimension_oracle(const DistanceMatrix& distances,
                                               const StrongOracleOptions& options) {
  distances.require_connected();
  const std::size_t n = distances.size();
  if (n > options.max_vertices || n > 63) {
    throw Error(ErrorCode::kBudgetExceeded,
                "brute-force strong metric dimension is capped at " +
                    std::to_string(std::min<std::size_t>(options.max_vertices, 63)) +
                    " vertices; graph has " + std::to_string(n));
  }
  // Bit w of masks[p] is set when w strongly resolves pair p.
  std::vector<std::uint64_t> masks;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      std::uint64_t m = 0;
      for (VertexId w = 0; w < n; ++w) {
        if (strongly_resolves(w, u, v, distances)) m |= std::uint64_t{1} << w;
      }
      masks.push_back(m);
    }
  }
  ResolvingResult result;
  for (std::size_t k = 0; k <= n; ++k) {
    // Lexicographic k-combinations of 0..n-1.
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      ++result.steps;
      std::uint64_t chosen = 0;
      for (std::size_t v : pick) chosen |= std::uint64_t{1} << v;
      const bool ok = std::all_of(masks.begin(), masks.end(),
                                  [&](std::uint64_t m) { return (m & chosen) != 0; });
      if (ok) {
        result.dimension = k;
        result.basis.assign(pick.begin(), pick.end());
        return result;
      }
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return result;  // unreachable: the full vertex set always resolves
}

namespace {

std::uint64_t product_of_chain_factors(const RingSpec& spec) {
  std::uint64_t p = 1;
  for (std::size_t i : chain_slots(spec)) {
    p *= static_cast<std::uint64_t>(spec.chain_length(i)) + 2;
  }
  return p;
}

}  // namespace

std::size_t predicted_beta(const RingSpec& spec) {
  const std::size_t n = spec.field_count();
  const std::size_t m = spec.chain_count();
  const auto sum = static_cast<std::size_t>(spec.chain_length_sum());
  switch (classify(spec)) {
    case RingFamily::kFieldProduct: return 2 * n - 3;
    case RingFamily::kChainProduct: return sum + m - 1;
    case RingFamily::kMixedSingleChain: return 2 * n + sum - 2;
    case RingFamily::kMixedMultiChain: return sum + 2 * n + m - 1;
    case RingFamily::kUncovered: break;
  }
  out_of_scope(spec, "the independence number of the strong resolving graph");
}

std::size_t predicted_sdim(const RingSpec& spec) {
  const std::size_t n = spec.field_count();
  const std::size_t m = spec.chain_count();
  const auto sum = static_cast<std::uint64_t>(spec.chain_length_sum());
  const std::uint64_t pow2 = std::uint64_t{1} << n;
  switch (classify(spec)) {
    case RingFamily::kFieldProduct:
      return static_cast<std::size_t>(pow2 - 2 * n + 1);
    case RingFamily::kChainProduct:
      return static_cast<std::size_t>(product_of_chain_factors(spec) - sum - m - 1);
    case RingFamily::kMixedSingleChain:
      return static_cast<std::size_t>((sum + 2) * pow2 - 2 * n - sum - 2);
    case RingFamily::kMixedMultiChain:
      return static_cast<std::size_t>(product_of_chain_factors(spec) * pow2 -
                                      sum - 2 * n - m - 1);
    case RingFamily::kUncovered:
      break;
  }
  out_of_scope(spec, "the strong metric dimension");
}

std::size_t predicted_srg_vertex_count(const RingSpec& spec) {
  switch (classify(spec)) {
    case RingFamily::kFieldProduct:
    case RingFamily::kChainProduct:
    case RingFamily::kMixedMultiChain:
      return static_cast<std::size_t>(vertex_count(spec));
    case RingFamily::kMixedSingleChain:
      return static_cast<std::size_t>(vertex_count(spec)) - 2;
    case RingFamily::kUncovered:
      break;
  }
  out_of_scope(spec, "the order of the strong resolving graph");
}

std::vector<IdealVector> predicted_max_independent_set(const RingSpec& spec) {
  const auto chains = chain_slots(spec);
  const auto fields = field_slots(spec);
  const std::size_t m = chains.size();
  const std::size_t n = fields.size();
  std::vector<IdealVector> out;

  // R in chain slots chains[from..], `first_fields` fields set, rest zero.
  auto suffix = [&](std::size_t from, std::size_t first_fields) {
    std::vector<int> levels(spec.component_count(), 0);
    for (std::size_t t = from; t < m; ++t) {
      levels[chains[t]] = spec.top_level(chains[t]);
    }
    for (std::size_t j = 0; j < first_fields; ++j) levels[fields[j]] = 1;
    return levels;
  };
  // I_k in chains[t], R in every later chain slot.
  auto add_staircase = [&] {
    for (std::size_t t = m; t-- > 0;) {
      for (int k = 1; k <= spec.chain_length(chains[t]); ++k) {
        auto levels = suffix(t + 1, 0);
        levels[chains[t]] = k;
        out.emplace_back(std::move(levels));
      }
    }
  };
  auto add_suffix_units = [&] {
    for (std::size_t t = m; t-- > 1;) out.emplace_back(suffix(t, 0));
  };
  auto add_minimal_fields = [&] {
    for (std::size_t f : fields) out.push_back(minimal_ideal(spec, f));
  };

  switch (classify(spec)) {
    case RingFamily::kFieldProduct:
      for (std::size_t j = 2; j + 1 < n; ++j) out.emplace_back(suffix(0, j));
      add_minimal_fields();
      return out;
    case RingFamily::kChainProduct:
      add_staircase();
      add_suffix_units();
      return out;
    case RingFamily::kMixedSingleChain: {
      const std::size_t p = chains.front();
      const int top_chain = spec.chain_length(p);
      for (int k = 2; k <= top_chain; ++k) out.push_back(single_slot(spec, p, k));
      for (std::size_t j = 1; j < n; ++j) {
        auto levels = suffix(0, j);
        levels[p] = top_chain;
        out.emplace_back(std::move(levels));
      }
      add_minimal_fields();
      return out;
    }
    case RingFamily::kMixedMultiChain: {
      add_staircase();
      add_suffix_units();
      for (std::size_t j = 1; j <= n; ++j) {
        auto levels = suffix(1, j);
        levels[chains.front()] = spec.chain_length(chains.front());
        out.emplace_back(std::move(levels));
      }
      add_minimal_fields();
      return out;
    }
    case RingFamily::kUncovered:
      break;
  }
  out_of_scope(spec, "a maximum independent set of the strong resolving graph");
}

}  // namespace idealgraph
