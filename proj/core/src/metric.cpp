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

#include "idealgraph/metric.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "idealgraph/errors.hpp"
#include "slots.hpp"

namespace idealgraph {

using detail::chain_slots;
using detail::field_slots;
using detail::single_slot;

RepresentationVector representation(VertexId v,
                                    std::span<const VertexId> landmarks,
                                    const DistanceMatrix& distances) {
  RepresentationVector out;
  out.reserve(landmarks.size());
  for (VertexId s : landmarks) {
    if (s == v) {
      throw Error(ErrorCode::kVertexInSet,
                  "vertex " + std::to_string(v) + " is one of the landmarks");
    }
    out.push_back(distances.hops(v, s));
  }
  return out;
}

bool is_resolving(std::span<const VertexId> landmarks,
                  const DistanceMatrix& distances) {
  distances.require_connected();
  std::vector<bool> in_set(distances.size(), false);
  for (VertexId s : landmarks) {
    if (s >= distances.size()) {
      throw Error(ErrorCode::kInvalidVertex, "landmark out of range");
    }
    in_set[s] = true;
  }
  std::set<RepresentationVector> seen;
  for (VertexId v = 0; v < distances.size(); ++v) {
    if (in_set[v]) continue;
    if (!seen.insert(representation(v, landmarks, distances)).second) {
      return false;
    }
  }
  return true;
}

namespace {

// A set S resolves the graph iff every pair {u, v} is separated by some
// w in S, i.e. d(w, u) != d(w, v). Pairs with an endpoint in S are
// separated by that endpoint, so this matches the "outside S" definition
// exactly. The search below is a minimum hitting set over those pairs.
class HittingSetSearch {
 public:
  HittingSetSearch(const DistanceMatrix& distances, const SearchBudget& budget)
      : n_(distances.size()), counter_(budget) {
    pair_count_ = n_ * (n_ - 1) / 2;
    hits_.assign(n_, DynamicBitset(pair_count_));
    hitters_.assign(pair_count_, DynamicBitset(n_));
    std::size_t p = 0;
    for (VertexId u = 0; u < n_; ++u) {
      for (VertexId v = u + 1; v < n_; ++v, ++p) {
        for (VertexId w = 0; w < n_; ++w) {
          if (distances.hops_unchecked(w, u) != distances.hops_unchecked(w, v)) {
            hits_[w].set(p);
            hitters_[p].set(w);
          }
        }
      }
    }
  }

  ResolvingResult run() {
    ResolvingResult result;
    if (n_ <= 1) {
      // The empty set resolves a single vertex.
      return result;
    }
    DynamicBitset all_pairs(pair_count_);
    all_pairs.set_all();
    DynamicBitset all_vertices(n_);
    all_vertices.set_all();

    std::size_t k = 1;
    while (!feasible(all_pairs, all_vertices, k)) ++k;

    DynamicBitset unhit = all_pairs;
    VertexId next = 0;
    for (std::size_t pos = 0; pos < k; ++pos) {
      for (VertexId v = next; v < n_; ++v) {
        DynamicBitset rest = unhit;
        rest.subtract(hits_[v]);
        DynamicBitset later(n_);
        for (VertexId u = v + 1; u < n_; ++u) later.set(u);
        if (feasible(rest, later, k - pos - 1)) {
          result.basis.push_back(v);
          unhit = std::move(rest);
          next = v + 1;
          break;
        }
      }
    }
    result.dimension = k;
    result.steps = counter_.used();
    return result;
  }

 private:
  // Can at most `budget` vertices from `allowed` hit every pair in `unhit`?
  bool feasible(const DynamicBitset& unhit, DynamicBitset allowed,
                std::size_t budget) {
    counter_.charge();
    const std::size_t open = unhit.count();
    if (open == 0) return true;
    if (budget == 0) return false;

    // Sum of the `budget` largest coverages must reach `open`.
    std::vector<std::size_t> cover;
    cover.reserve(n_);
    allowed.for_each([&](std::size_t w) {
      const std::size_t c = hits_[w].count_and(unhit);
      if (c > 0) cover.push_back(c);
    });
    counter_.charge(cover.size());
    if (cover.empty()) return false;
    const std::size_t take = std::min(budget, cover.size());
    std::partial_sort(cover.begin(), cover.begin() + take, cover.end(),
                      std::greater<>());
    std::size_t reach = 0;
    for (std::size_t i = 0; i < take; ++i) reach += cover[i];
    if (reach < open) return false;

    // Branch on the open pair with the fewest allowed separators.
    std::size_t best_pair = pair_count_;
    std::size_t best_count = n_ + 1;
    for (std::size_t p = unhit.find_first(); p < pair_count_;
         p = unhit.find_next(p + 1)) {
      const std::size_t c = hitters_[p].count_and(allowed);
      if (c < best_count) {
        best_count = c;
        best_pair = p;
        if (c <= 1) break;
      }
    }
    counter_.charge(open);
    if (best_count == 0) return false;

    DynamicBitset choices = hitters_[best_pair];
    choices &= allowed;
    for (std::size_t w = choices.find_first(); w < n_;
         w = choices.find_next(w + 1)) {
      allowed.reset(w);
      DynamicBitset rest = unhit;
      rest.subtract(hits_[w]);
      if (feasible(rest, allowed, budget - 1)) return true;
    }
    return false;
  }

  std::size_t n_;
  std::size_t pair_count_ = 0;
  StepCounter counter_;
  std::vector<DynamicBitset> hits_;     // vertex -> pairs it separates
  std::vector<DynamicBitset> hitters_;  // pair -> vertices separating it
};

}  // namespace

ResolvingResult metric_dimension_exact(const IdealGraph& graph,
                                       const DistanceMatrix& distances,
                                       const SearchBudget& budget) {
  if (distances.size() != graph.vertex_count()) {
    throw Error(ErrorCode::kInvalidVertex,
                "distance matrix does not belong to this graph");
  }
  distances.require_connected();
  return HittingSetSearch(distances, budget).run();
}

ResolvingResult metric_dimension_exact(const IdealGraph& graph,
                                       const SearchBudget& budget) {
  return metric_dimension_exact(graph, all_pairs_distances(graph), budget);
}

std::size_t predicted_metric_dimension(const RingSpec& spec) {
  const std::size_t n = spec.field_count();
  const std::size_t m = spec.chain_count();
  const auto sum = static_cast<std::size_t>(spec.chain_length_sum());
  switch (classify(spec)) {
    case RingFamily::kFieldProduct:
      return n <= 4 ? n - 1 : n;
    case RingFamily::kChainProduct:
      return sum + m - 1;
    case RingFamily::kMixedSingleChain:
      if (n == 1) return sum;
      if (n == 2) return sum + 2;
      return sum + m + n;
    case RingFamily::kMixedMultiChain:
      if (n >= 3) return sum + m + n;
      break;
    case RingFamily::kUncovered:
      break;
  }
  out_of_scope(spec, "the metric dimension");
}

std::vector<IdealVector> predicted_basis(const RingSpec& spec) {
  const auto chains = chain_slots(spec);
  const auto fields = field_slots(spec);
  const std::size_t n = fields.size();
  std::vector<IdealVector> out;

  auto add_minimal_fields = [&] {
    for (std::size_t f : fields) out.push_back(minimal_ideal(spec, f));
  };
  // Every ideal living in a single chain slot, from level `from` upwards.
  auto add_chain_columns = [&](int from) {
    for (std::size_t p : chains) {
      for (int k = from; k <= spec.top_level(p); ++k) {
        out.push_back(single_slot(spec, p, k));
      }
    }
  };

  switch (classify(spec)) {
    case RingFamily::kFieldProduct:
      if (n == 3) {
        // Two vertices at distance 2 on the six-cycle.
        out.push_back(minimal_ideal(spec, fields[0]));
        out.push_back(complement(spec, minimal_ideal(spec, fields[1])));
      } else if (n == 4) {
        for (std::size_t i = 0; i < 3; ++i) {
          out.push_back(minimal_ideal(spec, fields[i]));
        }
      } else {
        add_minimal_fields();
      }
      return out;
    case RingFamily::kChainProduct: {
      add_chain_columns(1);
      const IdealVector dropped = single_slot(spec, chains[0], 1);
      std::erase(out, dropped);
      return out;
    }
    case RingFamily::kMixedSingleChain:
      if (n == 1) {
        add_chain_columns(2);
      } else if (n == 2) {
        add_chain_columns(2);
        add_minimal_fields();
      } else {
        add_chain_columns(1);
        add_minimal_fields();
      }
      return out;
    case RingFamily::kMixedMultiChain:
      if (n >= 3) {
        add_chain_columns(1);
        add_minimal_fields();
        return out;
      }
      break;
    case RingFamily::kUncovered:
      break;
  }
  out_of_scope(spec, "a metric basis");
}

}  // namespace idealgraph
