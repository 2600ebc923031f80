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

#include "idealgraph/theorems.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "idealgraph/errors.hpp"
#include "idealgraph/metric.hpp"

namespace idealgraph {

namespace {

using Clock = std::chrono::steady_clock;

class Stage {
 public:
  Stage(VerificationReport& report, std::string name)
      : report_(report), name_(std::move(name)), start_(Clock::now()) {}
  ~Stage() {
    const std::chrono::duration<double, std::milli> took = Clock::now() - start_;
    report_.timings.push_back({name_, took.count()});
  }
  Stage(const Stage&) = delete;
  Stage& operator=(const Stage&) = delete;

 private:
  VerificationReport& report_;
  std::string name_;
  Clock::time_point start_;
};

bool is_code(const Error& e, ErrorCode code) { return e.code() == code; }

std::string list_ideals(const RingSpec& spec, const std::vector<IdealVector>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += render_ideal(spec, v[i]);
  }
  return out + "}";
}

template <class T>
void compare(VerificationReport& r, std::string_view what,
             const ReportField<T>& oracle, const ReportField<T>& predicted) {
  if (!oracle.has_value() || !predicted.has_value()) return;
  if (oracle.value == predicted.value) return;
  std::ostringstream os;
  os << what << ": computed " << oracle.value << ", predicted "
     << predicted.value;
  r.failures.push_back(os.str());
}

void require_true(VerificationReport& r, std::string_view what,
                  const ReportField<bool>& flag) {
  if (flag.has_value() && !flag.value) {
    r.failures.push_back(std::string(what) + " is false");
  }
}

void add_check(VerificationReport& r, std::string name, bool passed,
               std::string detail = {}) {
  if (passed) {
    detail.clear();
  } else {
    r.failures.push_back(name + ": " + detail);
  }
  r.checks.push_back({std::move(name), passed, std::move(detail)});
}

// d(I,J) = 3 exactly for complementary pairs; with chain rings present
// both ends must also be extremal.
void check_distance_three(VerificationReport& r, const IdealGraph& graph,
                          const DistanceMatrix& d) {
  const RingSpec& spec = graph.spec();
  const bool fields = r.family == RingFamily::kFieldProduct;
  if (!fields && r.family != RingFamily::kChainProduct) return;
  for (VertexId u = 0; u < graph.vertex_count(); ++u) {
    for (VertexId v = u + 1; v < graph.vertex_count(); ++v) {
      const IdealVector& a = graph.vertex(u);
      const IdealVector& b = graph.vertex(v);
      bool expect = false;
      if (fields || (is_extremal(spec, a) && is_extremal(spec, b))) {
        expect = zero_component_count(a) > 0 && complement(spec, a) == b;
      }
      if ((d.hops_unchecked(u, v) == 3) != expect) {
        add_check(r, "distance3_characterization", false,
                  render_ideal(spec, a) + " and " + render_ideal(spec, b) +
                      " at distance " +
                      std::to_string(d.hops_unchecked(u, v)));
        return;
      }
    }
  }
  add_check(r, "distance3_characterization", true);
}

// For extremal I, J: I ~ J^c iff J ~ I^c.
void check_complement_symmetry(VerificationReport& r, const IdealGraph& graph) {
  const RingSpec& spec = graph.spec();
  std::vector<VertexId> extremal;
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    if (is_extremal(spec, graph.vertex(v))) extremal.push_back(v);
  }
  for (VertexId i : extremal) {
    const VertexId ic = graph.require_index(complement(spec, graph.vertex(i)));
    for (VertexId j : extremal) {
      const VertexId jc = graph.require_index(complement(spec, graph.vertex(j)));
      if (graph.adjacent(i, jc) != graph.adjacent(j, ic)) {
        add_check(r, "complement_edge_symmetry", false,
                  render_ideal(spec, graph.vertex(i)) + " and " +
                      render_ideal(spec, graph.vertex(j)));
        return;
      }
    }
  }
  add_check(r, "complement_edge_symmetry", true);
}

std::size_t expected_k2_count(const RingSpec& spec, RingFamily family) {
  switch (family) {
    case RingFamily::kFieldProduct:
    case RingFamily::kMixedSingleChain:
    case RingFamily::kMixedMultiChain:
      return spec.field_count();
    case RingFamily::kChainProduct:
      return spec.component_count() == 2 && spec.chain_length(0) == 1 &&
                     spec.chain_length(1) == 1
                 ? 2
                 : 0;
    case RingFamily::kUncovered:
      break;
  }
  return 0;
}

void check_srg_shape(VerificationReport& r, const SrgStructureReport& shape) {
  const std::size_t k2 = expected_k2_count(r.spec, r.family);
  bool ok = shape.k2_count == k2 && shape.h_connected.value_or(true);
  // remainder that is itself a single edge
  if (!ok && k2 > 0 && shape.k2_count == k2 + 1 && shape.h_vertices == 0) ok = true;
  std::string detail;
  if (!ok) {
    detail = std::to_string(shape.k2_count) + " K2 components (expected " +
             std::to_string(k2) + "), remainder " +
             (shape.h_connected.value_or(true) ? "connected" : "disconnected");
  }
  // Two single-ideal chain rings: the remainder is a triangle.
  if (ok && r.family == RingFamily::kChainProduct && k2 == 2) {
    ok = shape.h_vertices == 3 && shape.components.size() == 3;
    if (!ok) detail = "expected K3 + K2 + K2";
  }
  add_check(r, "srg_shape", ok, detail);
}

void disconnected_report(VerificationReport& r) {
  const std::string why = "graph is disconnected";
  r.diameter = ReportField<unsigned>::out_of_scope(why);
  for (auto* f : {&r.dim_oracle, &r.dim_predicted, &r.srg_vertex_count,
                  &r.srg_edge_count, &r.srg_vertex_count_predicted,
                  &r.k2_count, &r.beta_oracle, &r.beta_predicted,
                  &r.sdim_reduction, &r.sdim_oracle, &r.sdim_predicted}) {
    *f = ReportField<std::size_t>::out_of_scope(why);
  }
  for (auto* f : {&r.basis_witness_valid, &r.srg_structural_matches,
                  &r.h_connected, &r.independent_set_witness_valid}) {
    *f = ReportField<bool>::out_of_scope(why);
  }
}

template <class F>
auto predicted(F&& f) -> ReportField<decltype(f())> {
  using T = decltype(f());
  try {
    return ReportField<T>::of(f());
  } catch (const Error& e) {
    if (!is_code(e, ErrorCode::kSpecOutOfTheoremScope)) throw;
    return ReportField<T>::out_of_scope(e.what());
  }
}

}  // namespace

bool VerificationReport::same_results(const VerificationReport& o) const {
  return spec == o.spec && family == o.family &&
         vertex_count == o.vertex_count && edge_count == o.edge_count &&
         connected == o.connected && diameter == o.diameter &&
         dim_oracle == o.dim_oracle && oracle_basis == o.oracle_basis &&
         dim_predicted == o.dim_predicted &&
         predicted_basis == o.predicted_basis &&
         basis_witness_valid == o.basis_witness_valid &&
         srg_vertex_count == o.srg_vertex_count &&
         srg_edge_count == o.srg_edge_count &&
         srg_vertex_count_predicted == o.srg_vertex_count_predicted &&
         srg_structural_matches == o.srg_structural_matches &&
         k2_count == o.k2_count && h_connected == o.h_connected &&
         beta_oracle == o.beta_oracle && beta_predicted == o.beta_predicted &&
         independent_set_witness_valid == o.independent_set_witness_valid &&
         sdim_reduction == o.sdim_reduction && sdim_oracle == o.sdim_oracle &&
         sdim_predicted == o.sdim_predicted && checks == o.checks &&
         verdict == o.verdict && failures == o.failures;
}

VerificationReport verify_spec(const RingSpec& spec,
                               const VerifyOptions& options) {
  VerificationReport r(spec);
  r.family = classify(spec);

  std::optional<IdealGraph> graph;
  std::optional<DistanceMatrix> dist;
  {
    Stage s(r, "graph");
    graph.emplace(build_graph(spec));
    dist.emplace(all_pairs_distances(*graph));
  }
  r.vertex_count = graph->vertex_count();
  r.edge_count = graph->edge_count();
  r.connected = dist->connected();
  if (!r.connected || graph->vertex_count() == 0) {
    disconnected_report(r);
    r.verdict = Verdict::kOutOfScope;
    return r;
  }
  const DistanceMatrix& d = *dist;
  r.diameter = ReportField<unsigned>::of(diameter(d));
  const bool covered = r.family != RingFamily::kUncovered;

  // Metric dimension.
  {
    Stage s(r, "dim_predicted");
    r.dim_predicted = predicted([&] { return predicted_metric_dimension(spec); });
    if (r.dim_predicted.has_value()) {
      r.predicted_basis = predicted_basis(spec);
      std::vector<VertexId> ids;
      for (const auto& b : r.predicted_basis) ids.push_back(graph->require_index(b));
      r.basis_witness_valid = ReportField<bool>::of(
          ids.size() == r.dim_predicted.value && is_resolving(ids, d));
    } else {
      r.basis_witness_valid =
          ReportField<bool>::out_of_scope(r.dim_predicted.note);
    }
  }
  {
    Stage s(r, "dim_oracle");
    try {
      const ResolvingResult exact =
          metric_dimension_exact(*graph, d, options.budget);
      r.dim_oracle = ReportField<std::size_t>::of(exact.dimension);
      for (VertexId v : exact.basis) r.oracle_basis.push_back(graph->vertex(v));
      add_check(r, "oracle_basis_resolves",
                exact.basis.size() == exact.dimension &&
                    is_resolving(exact.basis, d),
                "search returned a non-resolving set");
    } catch (const Error& e) {
      if (!is_code(e, ErrorCode::kBudgetExceeded)) throw;
      r.dim_oracle = ReportField<std::size_t>::skipped(e.what());
    }
  }

  // Strong resolving graph.
  std::optional<StrongResolvingGraph> srg;
  {
    Stage s(r, "srg");
    srg.emplace(build_srg_definitional(*graph, d));
    r.srg_vertex_count = ReportField<std::size_t>::of(srg->vertex_count());
    r.srg_edge_count = ReportField<std::size_t>::of(srg->edge_count());
    r.srg_vertex_count_predicted =
        predicted([&] { return predicted_srg_vertex_count(spec); });
    const SrgStructureReport shape = srg_structure(*srg);
    r.k2_count = ReportField<std::size_t>::of(shape.k2_count);
    r.h_connected = shape.h_connected
                        ? ReportField<bool>::of(*shape.h_connected)
                        : ReportField<bool>::out_of_scope("no vertices outside K2 components");
    r.srg_structural_matches = predicted([&] {
      return build_srg_structural(*graph) == *srg;
    });
    if (covered) check_srg_shape(r, shape);
  }

  // Independence number and strong metric dimension.
  {
    Stage s(r, "beta");
    r.beta_predicted = predicted([&] { return predicted_beta(spec); });
    r.sdim_predicted = predicted([&] { return predicted_sdim(spec); });
    try {
      const StrongDimensionResult sd =
          strong_metric_dimension(*srg, options.budget);
      r.beta_oracle = ReportField<std::size_t>::of(sd.independence);
      r.sdim_reduction = ReportField<std::size_t>::of(sd.dimension);
      std::vector<std::size_t> local_mis;
      for (VertexId v : sd.independent_set) local_mis.push_back(*srg->local_index(v));
      std::vector<std::size_t> local_cover;
      for (VertexId v : sd.vertex_cover) local_cover.push_back(*srg->local_index(v));
      add_check(r, "gallai_cover",
                is_independent_set(srg->graph(), local_mis) &&
                    is_vertex_cover(srg->graph(), local_cover) &&
                    local_mis.size() + local_cover.size() == srg->vertex_count(),
                "independent set and cover do not partition the vertices");
      add_check(r, "cover_strongly_resolves",
                is_strong_resolving_set(sd.vertex_cover, d),
                "cover misses a pair");
    } catch (const Error& e) {
      if (!is_code(e, ErrorCode::kBudgetExceeded)) throw;
      r.beta_oracle = ReportField<std::size_t>::skipped(e.what());
      r.sdim_reduction = ReportField<std::size_t>::skipped(e.what());
    }
    if (r.beta_predicted.has_value()) {
      const auto witness = predicted_max_independent_set(spec);
      std::vector<std::size_t> local;
      bool present = true;
      for (const auto& ideal : witness) {
        const auto base = graph->index_of(ideal);
        const auto loc = base ? srg->local_index(*base) : std::nullopt;
        if (!loc) {
          present = false;
          break;
        }
        local.push_back(*loc);
      }
      std::sort(local.begin(), local.end());
      const bool distinct =
          std::adjacent_find(local.begin(), local.end()) == local.end();
      r.independent_set_witness_valid = ReportField<bool>::of(
          present && distinct && local.size() == r.beta_predicted.value &&
          is_independent_set(srg->graph(), local));
    } else {
      r.independent_set_witness_valid =
          ReportField<bool>::out_of_scope(r.beta_predicted.note);
    }
  }
  {
    Stage s(r, "sdim_oracle");
    if (d.size() > options.oracle.max_vertices) {
      r.sdim_oracle = ReportField<std::size_t>::skipped(
          "more than " + std::to_string(options.oracle.max_vertices) +
          " vertices");
    } else {
      r.sdim_oracle = ReportField<std::size_t>::of(
          strong_metric_dimension_oracle(d, options.oracle).dimension);
    }
  }

  // Structural properties.
  {
    Stage s(r, "properties");
    add_check(r, "diameter_at_most_3", r.diameter.value <= 3,
              "diameter " + std::to_string(r.diameter.value));
    if (covered) {
      check_distance_three(r, *graph, d);
      check_complement_symmetry(r, *graph);
    }
    if (r.dim_oracle.has_value()) {
      const double bound =
          std::pow(static_cast<double>(r.diameter.value),
                   static_cast<double>(r.dim_oracle.value)) +
          static_cast<double>(r.dim_oracle.value);
      add_check(r, "order_bound", static_cast<double>(r.vertex_count) <= bound,
                std::to_string(r.vertex_count) + " vertices");
    }
  }

  compare(r, "metric dimension", r.dim_oracle, r.dim_predicted);
  if (r.basis_witness_valid.has_value() && !r.basis_witness_valid.value) {
    r.failures.push_back("predicted metric basis " +
                         list_ideals(spec, r.predicted_basis) +
                         " is not resolving");
  }
  compare(r, "SRG order", r.srg_vertex_count, r.srg_vertex_count_predicted);
  require_true(r, "structural SRG equals definitional SRG",
               r.srg_structural_matches);
  compare(r, "independence number", r.beta_oracle, r.beta_predicted);
  require_true(r, "predicted independent set", r.independent_set_witness_valid);
  compare(r, "strong dimension (oracle vs reduction)", r.sdim_oracle,
          r.sdim_reduction);
  compare(r, "strong dimension", r.sdim_reduction, r.sdim_predicted);

  const bool any_prediction =
      r.dim_predicted.has_value() || r.beta_predicted.has_value() ||
      r.sdim_predicted.has_value() || r.srg_structural_matches.has_value();
  if (!r.failures.empty()) {
    r.verdict = Verdict::kFail;
  } else {
    r.verdict = any_prediction ? Verdict::kPass : Verdict::kOutOfScope;
  }
  return r;
}

std::vector<RingSpec> grid_specs(const SweepGrid& grid) {
  std::vector<RingSpec> out;
  for (int n = std::max(grid.min_fields, 1); n <= grid.max_fields; ++n) {
    out.emplace_back(std::vector<int>(static_cast<std::size_t>(n), 0));
  }
  // All tuples in [1, k]^m, odometer order with the last entry fastest.
  auto tuples = [](int m, int k, auto&& emit) {
    if (m <= 0 || k <= 0) return;
    std::vector<int> t(static_cast<std::size_t>(m), 1);
    while (true) {
      emit(t);
      int i = m - 1;
      while (i >= 0 && t[static_cast<std::size_t>(i)] == k) {
        t[static_cast<std::size_t>(i)] = 1;
        --i;
      }
      if (i < 0) return;
      ++t[static_cast<std::size_t>(i)];
    }
  };
  for (int m = 2; m <= grid.max_chains; ++m) {
    tuples(m, grid.max_chain_length,
           [&](const std::vector<int>& t) { out.emplace_back(t); });
  }
  for (int m = 1; m <= grid.mixed_max_chains; ++m) {
    tuples(m, grid.mixed_max_chain_length, [&](const std::vector<int>& t) {
      for (int n = 1; n <= grid.mixed_max_fields; ++n) {
        std::vector<int> levels = t;
        levels.insert(levels.end(), static_cast<std::size_t>(n), 0);
        out.emplace_back(std::move(levels));
      }
    });
  }
  out.insert(out.end(), grid.extra.begin(), grid.extra.end());
  return out;
}

SweepSummary summarize(const std::vector<VerificationReport>& reports) {
  SweepSummary s;
  s.total = reports.size();
  for (const auto& r : reports) {
    switch (r.verdict) {
      case Verdict::kPass: ++s.passed; break;
      case Verdict::kFail: ++s.failed; break;
      case Verdict::kOutOfScope: ++s.out_of_scope; break;
    }
  }
  return s;
}

SweepResult sweep(const SweepGrid& grid, const VerifyOptions& options,
                  const SweepProgress& progress) {
  SweepResult out;
  const auto specs = grid_specs(grid);
  out.reports.reserve(specs.size());
  for (std::size_t i = 0; i < specs.size(); ++i) {
    out.reports.push_back(verify_spec(specs[i], options));
    if (progress) progress(i, specs.size(), out.reports.back());
  }
  out.summary = summarize(out.reports);
  return out;
}

std::string_view to_string(FieldState state) {
  switch (state) {
    case FieldState::kValue: return "value";
    case FieldState::kOutOfScope: return "out_of_scope";
    case FieldState::kSkipped: return "skipped";
  }
  return "?";
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::kPass: return "PASS";
    case Verdict::kFail: return "FAIL";
    case Verdict::kOutOfScope: return "OUT_OF_SCOPE";
  }
  return "?";
}

}  // namespace idealgraph
