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

// Verification harness: every quantity is computed twice, once by exact
// search on the graph and once from the closed forms, and the two are
// compared field by field.

#ifndef IDEALGRAPH_THEOREMS_HPP_
#define IDEALGRAPH_THEOREMS_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "idealgraph/inclusion_graph.hpp"
#include "idealgraph/ring_model.hpp"
#include "idealgraph/scope.hpp"
#include "idealgraph/strong.hpp"

namespace idealgraph {

enum class FieldState { kValue, kOutOfScope, kSkipped };

/// A report entry: a value, or the reason there is none.
template <class T>
struct ReportField {
  FieldState state = FieldState::kSkipped;
  T value{};
  std::string note;

  static ReportField of(T v) { return {FieldState::kValue, std::move(v), {}}; }
  static ReportField out_of_scope(std::string why) {
    return {FieldState::kOutOfScope, T{}, std::move(why)};
  }
  static ReportField skipped(std::string why) {
    return {FieldState::kSkipped, T{}, std::move(why)};
  }

  bool has_value() const { return state == FieldState::kValue; }
  friend bool operator==(const ReportField&, const ReportField&) = default;
};

struct PropertyCheck {
  std::string name;
  bool passed = false;
  std::string detail;  // first counterexample on failure
  friend bool operator==(const PropertyCheck&, const PropertyCheck&) = default;
};

struct StageTiming {
  std::string stage;
  double milliseconds = 0.0;
};

enum class Verdict { kPass, kFail, kOutOfScope };

struct VerificationReport {
  explicit VerificationReport(RingSpec s) : spec(std::move(s)) {}

  RingSpec spec;
  RingFamily family = RingFamily::kUncovered;
  std::uint64_t vertex_count = 0;
  std::size_t edge_count = 0;
  bool connected = false;
  ReportField<unsigned> diameter;

  ReportField<std::size_t> dim_oracle;
  std::vector<IdealVector> oracle_basis;
  ReportField<std::size_t> dim_predicted;
  std::vector<IdealVector> predicted_basis;
  ReportField<bool> basis_witness_valid;

  ReportField<std::size_t> srg_vertex_count;
  ReportField<std::size_t> srg_edge_count;
  ReportField<std::size_t> srg_vertex_count_predicted;
  ReportField<bool> srg_structural_matches;
  ReportField<std::size_t> k2_count;
  ReportField<bool> h_connected;

  ReportField<std::size_t> beta_oracle;
  ReportField<std::size_t> beta_predicted;
  ReportField<bool> independent_set_witness_valid;

  ReportField<std::size_t> sdim_reduction;
  ReportField<std::size_t> sdim_oracle;
  ReportField<std::size_t> sdim_predicted;

  std::vector<PropertyCheck> checks;
  std::vector<StageTiming> timings;

  Verdict verdict = Verdict::kOutOfScope;
  /// One line per failed comparison or check.
  std::vector<std::string> failures;

  /// Equality ignoring timings.
  bool same_results(const VerificationReport& other) const;
};

struct VerifyOptions {
  SearchBudget budget;
  StrongOracleOptions oracle;
};

VerificationReport verify_spec(const RingSpec& spec,
                               const VerifyOptions& options = {});

/// Parameter grid. Fields products use n in [min_fields, max_fields];
/// chain-ring products use m in [2, max_chains] with every length tuple in
/// [1, max_chain_length]^m; mixed products use m in [1, mixed_max_chains],
/// n in [1, mixed_max_fields] and lengths in [1, mixed_max_chain_length].
/// Ranges that are empty contribute nothing. `extra` specs go last.
struct SweepGrid {
  int min_fields = 3;
  int max_fields = 5;
  int max_chains = 3;
  int max_chain_length = 3;
  int mixed_max_chains = 2;
  int mixed_max_fields = 3;
  int mixed_max_chain_length = 3;
  std::vector<RingSpec> extra;
};

/// Specs of the grid in sweep order.
std::vector<RingSpec> grid_specs(const SweepGrid& grid);

struct SweepSummary {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t out_of_scope = 0;
};

struct SweepResult {
  std::vector<VerificationReport> reports;
  SweepSummary summary;
};

/// Called after each report, in grid order.
using SweepProgress =
    std::function<void(std::size_t index, std::size_t total,
                       const VerificationReport& report)>;

SweepResult sweep(const SweepGrid& grid, const VerifyOptions& options = {},
                  const SweepProgress& progress = {});

SweepSummary summarize(const std::vector<VerificationReport>& reports);

std::string_view to_string(FieldState state);
std::string_view to_string(Verdict verdict);

}  // namespace idealgraph

#endif  // IDEALGRAPH_THEOREMS_HPP_
