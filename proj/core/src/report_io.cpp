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

#include "idealgraph/report_io.hpp"

#include <cstdio>
#include <sstream>

#include <nlohmann/json.hpp>

#include "idealgraph/errors.hpp"

namespace idealgraph {

using nlohmann::json;

namespace {

template <class T>
json field_json(const ReportField<T>& f) {
  if (f.has_value()) return json(f.value);
  return json{{"state", to_string(f.state)}, {"note", f.note}};
}

template <class T>
ReportField<T> field_from(const json& j) {
  if (!j.is_object()) return ReportField<T>::of(j.get<T>());
  const auto state = j.at("state").get<std::string>();
  auto note = j.at("note").get<std::string>();
  if (state == "out_of_scope") return ReportField<T>::out_of_scope(std::move(note));
  if (state == "skipped") return ReportField<T>::skipped(std::move(note));
  throw Error(ErrorCode::kMalformedDocument, "unknown field state " + state);
}

json basis_json(const std::vector<IdealVector>& basis) {
  json out = json::array();
  for (const auto& b : basis) out.push_back(b.levels());
  return out;
}

std::vector<IdealVector> basis_from(const json& j) {
  std::vector<IdealVector> out;
  for (const auto& b : j) out.emplace_back(b.get<std::vector<int>>());
  return out;
}

template <class T>
std::string cell(const ReportField<T>& f) {
  switch (f.state) {
    case FieldState::kValue:
      if constexpr (std::is_same_v<T, bool>) {
        return f.value ? "yes" : "no";
      } else {
        return std::to_string(f.value);
      }
    case FieldState::kOutOfScope: return "-";
    case FieldState::kSkipped: return "skip";
  }
  return "?";
}

// "computed/predicted" or just "computed" when nothing is predicted.
template <class T>
std::string pair_cell(const ReportField<T>& oracle,
                      const ReportField<T>& predicted) {
  return cell(oracle) + "/" + cell(predicted);
}

std::string render_set(const RingSpec& spec,
                       const std::vector<IdealVector>& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out += ", ";
    out += render_ideal(spec, set[i]);
  }
  return out + "}";
}

RingFamily family_from(std::string_view name) {
  for (RingFamily f : {RingFamily::kFieldProduct, RingFamily::kChainProduct,
                       RingFamily::kMixedSingleChain,
                       RingFamily::kMixedMultiChain, RingFamily::kUncovered}) {
    if (to_string(f) == name) return f;
  }
  throw Error(ErrorCode::kMalformedDocument,
              "unknown family " + std::string(name));
}

Verdict verdict_from(std::string_view name) {
  for (Verdict v : {Verdict::kPass, Verdict::kFail, Verdict::kOutOfScope}) {
    if (to_string(v) == name) return v;
  }
  throw Error(ErrorCode::kMalformedDocument,
              "unknown verdict " + std::string(name));
}

}  // namespace

std::string to_json_line(const VerificationReport& r) {
  json j;
  j["spec"] = r.spec.to_string();
  j["chain_lengths"] = r.spec.chain_lengths();
  j["family"] = to_string(r.family);
  j["vertex_count"] = r.vertex_count;
  j["edge_count"] = r.edge_count;
  j["connected"] = r.connected;
  j["diameter"] = field_json(r.diameter);
  j["dim_oracle"] = field_json(r.dim_oracle);
  j["oracle_basis"] = basis_json(r.oracle_basis);
  j["dim_predicted"] = field_json(r.dim_predicted);
  j["predicted_basis"] = basis_json(r.predicted_basis);
  j["basis_witness_valid"] = field_json(r.basis_witness_valid);
  j["srg_vertex_count"] = field_json(r.srg_vertex_count);
  j["srg_edge_count"] = field_json(r.srg_edge_count);
  j["srg_vertex_count_predicted"] = field_json(r.srg_vertex_count_predicted);
  j["srg_structural_matches"] = field_json(r.srg_structural_matches);
  j["k2_count"] = field_json(r.k2_count);
  j["h_connected"] = field_json(r.h_connected);
  j["beta_oracle"] = field_json(r.beta_oracle);
  j["beta_predicted"] = field_json(r.beta_predicted);
  j["independent_set_witness_valid"] =
      field_json(r.independent_set_witness_valid);
  j["sdim_reduction"] = field_json(r.sdim_reduction);
  j["sdim_oracle"] = field_json(r.sdim_oracle);
  j["sdim_predicted"] = field_json(r.sdim_predicted);
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  j["checks"] = std::move(checks);
  json timings = json::object();
  for (const auto& t : r.timings) timings[t.stage] = t.milliseconds;
  j["timings_ms"] = std::move(timings);
  j["verdict"] = to_string(r.verdict);
  j["failures"] = r.failures;
  return j.dump();
}

std::string to_json_line(const SweepSummary& s) {
  json j;
  j["summary"] = {{"total", s.total},
                  {"passed", s.passed},
                  {"failed", s.failed},
                  {"out_of_scope", s.out_of_scope}};
  return j.dump();
}

VerificationReport parse_report_json(std::string_view line) {
  const json j = json::parse(line, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded() || !j.is_object()) {
    throw Error(ErrorCode::kMalformedDocument, "report is not a JSON object");
  }
  try {
    VerificationReport r(RingSpec(j.at("chain_lengths").get<std::vector<int>>()));
    r.family = family_from(j.at("family").get<std::string>());
    r.vertex_count = j.at("vertex_count").get<std::uint64_t>();
    r.edge_count = j.at("edge_count").get<std::size_t>();
    r.connected = j.at("connected").get<bool>();
    r.diameter = field_from<unsigned>(j.at("diameter"));
    r.dim_oracle = field_from<std::size_t>(j.at("dim_oracle"));
    r.oracle_basis = basis_from(j.at("oracle_basis"));
    r.dim_predicted = field_from<std::size_t>(j.at("dim_predicted"));
    r.predicted_basis = basis_from(j.at("predicted_basis"));
    r.basis_witness_valid = field_from<bool>(j.at("basis_witness_valid"));
    r.srg_vertex_count = field_from<std::size_t>(j.at("srg_vertex_count"));
    r.srg_edge_count = field_from<std::size_t>(j.at("srg_edge_count"));
    r.srg_vertex_count_predicted =
        field_from<std::size_t>(j.at("srg_vertex_count_predicted"));
    r.srg_structural_matches = field_from<bool>(j.at("srg_structural_matches"));
    r.k2_count = field_from<std::size_t>(j.at("k2_count"));
    r.h_connected = field_from<bool>(j.at("h_connected"));
    r.beta_oracle = field_from<std::size_t>(j.at("beta_oracle"));
    r.beta_predicted = field_from<std::size_t>(j.at("beta_predicted"));
    r.independent_set_witness_valid =
        field_from<bool>(j.at("independent_set_witness_valid"));
    r.sdim_reduction = field_from<std::size_t>(j.at("sdim_reduction"));
    r.sdim_oracle = field_from<std::size_t>(j.at("sdim_oracle"));
    r.sdim_predicted = field_from<std::size_t>(j.at("sdim_predicted"));
    for (const auto& c : j.at("checks")) {
      r.checks.push_back({c.at("name").get<std::string>(),
                          c.at("passed").get<bool>(),
                          c.at("detail").get<std::string>()});
    }
    for (const auto& [stage, ms] : j.at("timings_ms").items()) {
      r.timings.push_back({stage, ms.get<double>()});
    }
    r.verdict = verdict_from(j.at("verdict").get<std::string>());
    r.failures = j.at("failures").get<std::vector<std::string>>();
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kMalformedDocument, e.what());
  }
}

std::string to_text(const VerificationReport& r) {
  std::ostringstream os;
  os << "spec " << r.spec.to_string() << " (" << to_string(r.family) << ")\n";
  os << "  vertices=" << r.vertex_count << " edges=" << r.edge_count
     << " connected=" << (r.connected ? "true" : "false")
     << " diameter=" << cell(r.diameter) << "\n";
  os << "  dim=" << cell(r.dim_oracle) << " predicted=" << cell(r.dim_predicted)
     << " basis_valid=" << cell(r.basis_witness_valid) << "\n";
  if (!r.predicted_basis.empty()) {
    os << "  predicted basis " << render_set(r.spec, r.predicted_basis) << "\n";
  }
  if (!r.oracle_basis.empty()) {
    os << "  computed basis " << render_set(r.spec, r.oracle_basis) << "\n";
  }
  os << "  srg vertices=" << cell(r.srg_vertex_count)
     << " predicted=" << cell(r.srg_vertex_count_predicted)
     << " edges=" << cell(r.srg_edge_count)
     << " structural_match=" << cell(r.srg_structural_matches)
     << " k2=" << cell(r.k2_count) << " h_connected=" << cell(r.h_connected)
     << "\n";
  os << "  beta=" << cell(r.beta_oracle) << " predicted=" << cell(r.beta_predicted)
     << " witness_valid=" << cell(r.independent_set_witness_valid) << "\n";
  os << "  sdim=" << cell(r.sdim_reduction) << " oracle=" << cell(r.sdim_oracle)
     << " predicted=" << cell(r.sdim_predicted) << "\n";
  for (const auto& c : r.checks) {
    os << "  check " << c.name << ": " << (c.passed ? "ok" : "FAILED");
    if (!c.passed) os << " (" << c.detail << ")";
    os << "\n";
  }
  for (const auto& f : r.failures) os << "  failure: " << f << "\n";
  os << "  verdict " << to_string(r.verdict) << "\n";
  return os.str();
}

std::string table_header() {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%-16s %5s %4s %7s %7s %7s %5s %9s %5s %s",
                "spec", "|V|", "diam", "dim", "beta", "sdim", "srgV",
                "sdim_orc", "wit", "verdict");
  return buf;
}

std::string table_row(const VerificationReport& r) {
  const std::string wit = cell(r.basis_witness_valid) + "," +
                          cell(r.independent_set_witness_valid);
  char buf[200];
  std::snprintf(buf, sizeof buf, "%-16s %5llu %4s %7s %7s %7s %5s %9s %5s %s",
                r.spec.to_string().c_str(),
                static_cast<unsigned long long>(r.vertex_count),
                cell(r.diameter).c_str(),
                pair_cell(r.dim_oracle, r.dim_predicted).c_str(),
                pair_cell(r.beta_oracle, r.beta_predicted).c_str(),
                pair_cell(r.sdim_reduction, r.sdim_predicted).c_str(),
                cell(r.srg_vertex_count).c_str(), cell(r.sdim_oracle).c_str(),
                wit.c_str(), std::string(to_string(r.verdict)).c_str());
  return buf;
}

std::string to_table(const std::vector<VerificationReport>& reports) {
  std::string out = table_header() + "\n";
  for (const auto& r : reports) out += table_row(r) + "\n";
  return out;
}

std::string to_text(const SweepSummary& s) {
  return "total=" + std::to_string(s.total) + " passed=" +
         std::to_string(s.passed) + " failed=" + std::to_string(s.failed) +
         " out_of_scope=" + std::to_string(s.out_of_scope);
}

}  // namespace idealgraph
