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

#include <algorithm>

#include "idealgraph/errors.hpp"

namespace idealgraph {

void SimpleGraph::add_edge(std::size_t u, std::size_t v) {
  if (u == v || u >= rows_.size() || v >= rows_.size()) {
    throw Error(ErrorCode::kInvalidVertex, "bad edge endpoints");
  }
  rows_[u].set(v);
  rows_[v].set(u);
}

std::size_t SimpleGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& r : rows_) twice += r.count();
  return twice / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> SimpleGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < rows_.size(); ++u) {
    rows_[u].for_each([&](std::size_t v) {
      if (u < v) out.emplace_back(u, v);
    });
  }
  return out;
}

namespace {

class MaxIndependentSet {
 public:
  MaxIndependentSet(const SimpleGraph& g, const SearchBudget& budget)
      : g_(g), n_(g.vertex_count()), counter_(budget) {}

  IndependentSetResult run() {
    DynamicBitset all(n_);
    all.set_all();
    best_ = greedy(all);
    std::vector<std::size_t> current;
    search(all, current);
    IndependentSetResult out;
    std::sort(best_.begin(), best_.end());
    out.size = best_.size();
    out.witness = best_;
    out.steps = counter_.used();
    return out;
  }

 private:
  // Repeatedly take a minimum-degree vertex of what is left.
  std::vector<std::size_t> greedy(DynamicBitset left) const {
    std::vector<std::size_t> picked;
    while (left.any()) {
      std::size_t pick = n_;
      std::size_t pick_degree = n_ + 1;
      left.for_each([&](std::size_t v) {
        const std::size_t d = g_.neighbor_set(v).count_and(left);
        if (d < pick_degree) {
          pick_degree = d;
          pick = v;
        }
      });
      picked.push_back(pick);
      left.reset(pick);
      left.subtract(g_.neighbor_set(pick));
    }
    return picked;
  }

  // Greedy partition of `cand` into cliques; an independent set takes at
  // most one vertex from each.
  std::size_t clique_cover_bound(const DynamicBitset& cand) const {
    std::vector<DynamicBitset> joinable;  // common neighbours of each clique
    cand.for_each([&](std::size_t v) {
      for (auto& common : joinable) {
        if (common.test(v)) {
          common &= g_.neighbor_set(v);
          return;
        }
      }
      joinable.push_back(g_.neighbor_set(v));
    });
    return joinable.size();
  }

  void search(DynamicBitset cand, std::vector<std::size_t>& current) {
    counter_.charge();
    const std::size_t mark = current.size();

    // Vertices of degree <= 1 inside `cand` belong to some maximum set.
    bool reduced = true;
    while (reduced) {
      reduced = false;
      for (std::size_t v = cand.find_first(); v < n_; v = cand.find_next(v + 1)) {
        if (g_.neighbor_set(v).count_and(cand) <= 1) {
          current.push_back(v);
          cand.reset(v);
          cand.subtract(g_.neighbor_set(v));
          reduced = true;
        }
      }
    }

    if (cand.none()) {
      if (current.size() > best_.size()) best_ = current;
      current.resize(mark);
      return;
    }
    if (current.size() + clique_cover_bound(cand) <= best_.size()) {
      current.resize(mark);
      return;
    }

    std::size_t pivot = n_;
    std::size_t pivot_degree = 0;
    cand.for_each([&](std::size_t v) {
      const std::size_t d = g_.neighbor_set(v).count_and(cand);
      if (pivot == n_ || d > pivot_degree) {
        pivot = v;
        pivot_degree = d;
      }
    });

    DynamicBitset with = cand;
    with.reset(pivot);
    with.subtract(g_.neighbor_set(pivot));
    current.push_back(pivot);
    search(std::move(with), current);
    current.pop_back();

    cand.reset(pivot);
    search(std::move(cand), current);
    current.resize(mark);
  }

  const SimpleGraph& g_;
  std::size_t n_;
  StepCounter counter_;
  std::vector<std::size_t> best_;
};

}  // namespace

IndependentSetResult maximum_independent_set(const SimpleGraph& graph,
                                             const SearchBudget& budget) {
  return MaxIndependentSet(graph, budget).run();
}

bool is_independent_set(const SimpleGraph& graph,
                        std::span<const std::size_t> set) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      if (set[i] == set[j] || graph.adjacent(set[i], set[j])) return false;
    }
  }
  return true;
}

bool is_vertex_cover(const SimpleGraph& graph,
                     std::span<const std::size_t> set) {
  DynamicBitset in(graph.vertex_count());
  for (std::size_t v : set) in.set(v);
  for (const auto& [u, v] : graph.edges()) {
    if (!in.test(u) && !in.test(v)) return false;
  }
  return true;
}

std::vector<std::size_t> complement_of(std::size_t n,
                                       std::span<const std::size_t> set) {
  std::vector<bool> in(n, false);
  for (std::size_t v : set) in[v] = true;
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < n; ++v) {
    if (!in[v]) out.push_back(v);
  }
  return out;
}

}  // namespace idealgraph
