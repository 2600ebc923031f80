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

// Report serialization.
//
// JSON lines: one object per report, keys
//   spec (string), chain_lengths, family, vertex_count, edge_count,
//   connected, diameter, dim_oracle, oracle_basis, dim_predicted,
//   predicted_basis, basis_witness_valid, srg_vertex_count, srg_edge_count,
//   srg_vertex_count_predicted, srg_structural_matches, k2_count,
//   h_connected, beta_oracle, beta_predicted, independent_set_witness_valid,
//   sdim_reduction, sdim_oracle, sdim_predicted, checks, timings_ms,
//   verdict, failures.
// A field without a value is written as {"state": "out_of_scope" |
// "skipped", "note": string}. Bases are arrays of level arrays.
// The summary line is {"summary": {"total", "passed", "failed",
// "out_of_scope"}}.

#ifndef IDEALGRAPH_REPORT_IO_HPP_
#define IDEALGRAPH_REPORT_IO_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "idealgraph/theorems.hpp"

namespace idealgraph {

std::string to_json_line(const VerificationReport& report);
std::string to_json_line(const SweepSummary& summary);

/// Inverse of to_json_line; timings are restored too.
/// Throws Error(kMalformedDocument).
VerificationReport parse_report_json(std::string_view line);

/// Multi-line human-readable rendering of one report.
std::string to_text(const VerificationReport& report);

/// One row per report.
std::string table_header();
std::string table_row(const VerificationReport& report);
std::string to_table(const std::vector<VerificationReport>& reports);

std::string to_text(const SweepSummary& summary);

}  // namespace idealgraph

#endif  // IDEALGRAPH_REPORT_IO_HPP_
