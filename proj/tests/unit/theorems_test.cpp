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

#include <gtest/gtest.h>

#include <algorithm>

namespace idealgraph {
namespace {

const PropertyCheck* find_check(const VerificationReport& r, std::string_view name) {
  for (const auto& c : r.checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

TEST(VerifySpec, FourFields) {
  const auto r = verify_spec(RingSpec{0, 0, 0, 0});
  EXPECT_EQ(r.verdict, Verdict::kPass);
  EXPECT_EQ(r.dim_oracle.value, 3u);
  EXPECT_EQ(r.dim_predicted.value, 3u);
  EXPECT_EQ(r.beta_oracle.value, 5u);
  EXPECT_EQ(r.sdim_reduction.value, 9u);
  EXPECT_EQ(r.sdim_oracle.value, 9u);
  EXPECT_EQ(r.k2_count.value, 4u);
  EXPECT_TRUE(r.h_connected.value);
  EXPECT_TRUE(r.failures.empty());
  for (const char* name : {"diameter_at_most_3", "distance3_characterization",
                           "complement_edge_symmetry", "srg_shape", "order_bound",
                           "gallai_cover"}) {
    const PropertyCheck* c = find_check(r, name);
    ASSERT_NE(c, nullptr) << name;
    EXPECT_TRUE(c->passed) << name;
  }
}

TEST(VerifySpec, TwoSingleIdealChains) {
  const auto r = verify_spec(RingSpec{1, 1});
  EXPECT_EQ(r.verdict, Verdict::kPass);
  EXPECT_EQ(r.dim_oracle.value, 3u);
  EXPECT_EQ(r.sdim_reduction.value, 4u);
  EXPECT_EQ(r.k2_count.value, 2u);
  EXPECT_EQ(r.srg_vertex_count.value, 7u);
  EXPECT_TRUE(r.srg_structural_matches.value);
}

TEST(VerifySpec, DisconnectedIsOutOfScope) {
  const auto r = verify_spec(RingSpec{0, 0});
  EXPECT_FALSE(r.connected);
  EXPECT_EQ(r.verdict, Verdict::kOutOfScope);
  EXPECT_EQ(r.dim_predicted.state, FieldState::kOutOfScope);
  EXPECT_EQ(r.beta_predicted.state, FieldState::kOutOfScope);
  EXPECT_EQ(r.sdim_predicted.state, FieldState::kOutOfScope);
  EXPECT_EQ(r.diameter.state, FieldState::kOutOfScope);
  EXPECT_TRUE(r.failures.empty());
}

TEST(VerifySpec, SingleChainIsOutOfScope) {
  const auto r = verify_spec(RingSpec{3});
  EXPECT_TRUE(r.connected);
  EXPECT_EQ(r.verdict, Verdict::kOutOfScope);
  EXPECT_EQ(r.dim_oracle.value, 2u);
  EXPECT_EQ(r.dim_predicted.state, FieldState::kOutOfScope);
}

TEST(VerifySpec, PartialScopeStillPasses) {
  // no dimension formula, but the strong results apply
  const auto r = verify_spec(RingSpec{1, 1, 0});
  EXPECT_EQ(r.dim_predicted.state, FieldState::kOutOfScope);
  EXPECT_EQ(r.basis_witness_valid.state, FieldState::kOutOfScope);
  EXPECT_EQ(r.dim_oracle.value, 4u);
  EXPECT_EQ(r.beta_predicted.value, 5u);
  EXPECT_EQ(r.sdim_predicted.value, 11u);
  EXPECT_EQ(r.verdict, Verdict::kPass);
}

TEST(VerifySpec, BudgetSkipsStageOnly) {
  VerifyOptions opts;
  opts.budget.max_steps = 20;
  const auto r = verify_spec(RingSpec{0, 0, 0, 0, 0}, opts);
  EXPECT_EQ(r.dim_oracle.state, FieldState::kSkipped);
  EXPECT_EQ(r.dim_predicted.value, 5u);
  EXPECT_TRUE(r.basis_witness_valid.value);
  EXPECT_EQ(r.sdim_predicted.value, 23u);
  EXPECT_EQ(r.srg_vertex_count.value, 30u);
  EXPECT_NE(r.verdict, Verdict::kFail);
}

TEST(VerifySpec, OracleCapSkipsDefinitionalSdim) {
  const auto r = verify_spec(RingSpec{1, 1, 0, 0, 0});
  EXPECT_EQ(r.sdim_oracle.state, FieldState::kSkipped);
  EXPECT_EQ(r.sdim_reduction.value, 61u);
}

TEST(VerifySpec, Deterministic) {
  const auto a = verify_spec(RingSpec{2, 0, 0});
  const auto b = verify_spec(RingSpec{2, 0, 0});
  EXPECT_TRUE(a.same_results(b));
  EXPECT_FALSE(a.timings.empty());
}

TEST(GridSpecs, DefaultGrid) {
  const auto specs = grid_specs(SweepGrid{});
  EXPECT_EQ(specs.size(), 75u);
  EXPECT_EQ(specs.front(), (RingSpec{0, 0, 0}));
  EXPECT_EQ(specs[3], (RingSpec{1, 1}));
  EXPECT_EQ(specs.back(), (RingSpec{3, 3, 0, 0, 0}));
  std::uint64_t largest = 0;
  for (const auto& s : specs) largest = std::max(largest, vertex_count(s));
  EXPECT_EQ(largest, 198u);
}

TEST(GridSpecs, FieldsOnly) {
  SweepGrid g;
  g.max_fields = 4;
  g.max_chains = 0;
  g.mixed_max_chains = 0;
  EXPECT_EQ(grid_specs(g).size(), 2u);
}

TEST(Sweep, ExtraSpecOutOfScopeNotFailed) {
  SweepGrid g;
  g.max_fields = 0;
  g.max_chains = 0;
  g.mixed_max_chains = 0;
  g.extra = {RingSpec{0, 0}};
  std::vector<std::size_t> seen;
  const auto res = sweep(g, {}, [&](std::size_t i, std::size_t n, const auto&) {
    seen.push_back(i);
    EXPECT_EQ(n, 1u);
  });
  ASSERT_EQ(res.reports.size(), 1u);
  EXPECT_EQ(res.summary.out_of_scope, 1u);
  EXPECT_EQ(res.summary.failed, 0u);
  EXPECT_EQ(seen, (std::vector<std::size_t>{0}));
}

TEST(Sweep, SmallGridOrderAndSummary) {
  SweepGrid g;
  g.max_fields = 4;
  g.max_chains = 2;
  g.max_chain_length = 2;
  g.mixed_max_chains = 1;
  g.mixed_max_fields = 2;
  g.mixed_max_chain_length = 2;
  const auto res = sweep(g);
  const auto specs = grid_specs(g);
  ASSERT_EQ(res.reports.size(), specs.size());
  for (std::size_t i = 0; i < specs.size(); ++i) {
    EXPECT_EQ(res.reports[i].spec, specs[i]);
    EXPECT_EQ(res.reports[i].verdict, Verdict::kPass) << specs[i].to_string();
  }
  EXPECT_EQ(res.summary.total, specs.size());
  EXPECT_EQ(res.summary.passed, specs.size());
}

TEST(Names, Strings) {
  EXPECT_EQ(to_string(Verdict::kPass), "PASS");
  EXPECT_EQ(to_string(Verdict::kFail), "FAIL");
  EXPECT_EQ(to_string(FieldState::kSkipped), "skipped");
}

}  // namespace
}  // namespace idealgraph
