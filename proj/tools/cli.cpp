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

#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "idealgraph/errors.hpp"
#include "idealgraph/graph_io.hpp"
#include "idealgraph/inclusion_graph.hpp"
#include "idealgraph/metric.hpp"
#include "idealgraph/report_io.hpp"
#include "idealgraph/ring_model.hpp"
#include "idealgraph/strong.hpp"
#include "idealgraph/theorems.hpp"

namespace idealgraph::cli {

namespace {

using nlohmann::json;

constexpr const char* kGrammar =
    "ring spec grammar: component (\",\" component)*, component = F | C<k> "
    "(k >= 1), e.g. \"F,F,F\" or \"C2,C1,F\"";

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Minimal field ideals print as X<i>, their complements as X<i>^c, and
// everything else componentwise.
std::string label(const RingSpec& spec, const IdealVector& ideal) {
  for (std::size_t i = 0; i < spec.component_count(); ++i) {
    if (!spec.is_field(i)) continue;
    const IdealVector x = minimal_ideal(spec, i);
    if (ideal == x) return "X" + std::to_string(i + 1);
    if (spec.component_count() > 1 && ideal == complement(spec, x)) {
      return "X" + std::to_string(i + 1) + "^c";
    }
  }
  return render_ideal(spec, ideal);
}

std::string label_set(const RingSpec& spec, const std::vector<IdealVector>& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out += ",";
    out += label(spec, set[i]);
  }
  return out + "}";
}

json levels_json(const std::vector<IdealVector>& set) {
  json out = json::array();
  for (const auto& v : set) out.push_back(v.levels());
  return out;
}

std::vector<IdealVector> ideals_of(const IdealGraph& g,
                                   const std::vector<VertexId>& ids) {
  std::vector<IdealVector> out;
  for (VertexId v : ids) out.push_back(g.vertex(v));
  return out;
}

SearchBudget budget_of(const CliConfig& c) {
  SearchBudget b;
  if (c.budget) b.max_steps = *c.budget;
  return b;
}

int cmd_info(const CliConfig& c, const RingSpec& spec, std::ostream& out) {
  const IdealGraph g = build_graph(spec);
  const DistanceMatrix d = all_pairs_distances(g);
  if (c.format == Format::kJson) {
    json j;
    j["spec"] = spec.to_string();
    j["chain_lengths"] = spec.chain_lengths();
    j["family"] = to_string(classify(spec));
    j["vertex_count"] = g.vertex_count();
    j["edge_count"] = g.edge_count();
    j["connected"] = d.connected();
    j["diameter"] = d.connected() ? json(diameter(d)) : json(nullptr);
    out << j.dump() << "\n";
    return kExitOk;
  }
  out << "spec=" << spec.to_string() << " vertices=" << g.vertex_count()
      << " edges=" << g.edge_count()
      << " connected=" << (d.connected() ? "true" : "false");
  if (d.connected()) out << " diameter=" << diameter(d);
  out << " family=" << to_string(classify(spec)) << "\n";
  return kExitOk;
}

void text_graph(const RingSpec& spec, const std::vector<IdealVector>& vertices,
                const std::vector<Edge>& edges, std::ostream& out) {
  out << "vertices " << vertices.size() << "\n";
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    out << "  " << i << " " << render_ideal(spec, vertices[i]) << "\n";
  }
  out << "edges " << edges.size() << "\n";
  for (const auto& [u, v] : edges) out << "  " << u << " " << v << "\n";
}

int cmd_graph(const CliConfig& c, const RingSpec& spec, std::ostream& out) {
  const IdealGraph g = build_graph(spec);
  switch (c.format) {
    case Format::kDot: out << to_dot(g); break;
    case Format::kJson: out << to_json(g) << "\n"; break;
    case Format::kText: text_graph(spec, g.vertices(), g.edges(), out); break;
  }
  return kExitOk;
}

int cmd_srg(const CliConfig& c, const RingSpec& spec, std::ostream& out) {
  const IdealGraph g = build_graph(spec);
  const DistanceMatrix d = all_pairs_distances(g);
  const StrongResolvingGraph srg = build_srg_definitional(g, d);
  switch (c.format) {
    case Format::kDot: out << to_dot(srg, g); break;
    case Format::kJson: out << to_json(srg, g) << "\n"; break;
    case Format::kText: {
      std::vector<Edge> local;
      for (const auto& e : srg.graph().edges()) local.emplace_back(e);
      text_graph(spec, ideals_of(g, srg.base_vertices()), local, out);
      const SrgStructureReport shape = srg_structure(srg);
      out << "k2_components=" << shape.k2_count
          << " h_vertices=" << shape.h_vertices << " h_connected="
          << (shape.h_connected ? (*shape.h_connected ? "true" : "false") : "n/a")
          << " components=" << shape.components.size() << "\n";
      break;
    }
  }
  return kExitOk;
}

// Runs `f`; on out-of-scope returns nullopt and the reason.
template <class F>
auto try_predict(F&& f, std::string& why) -> std::optional<decltype(f())> {
  try {
    return f();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kSpecOutOfTheoremScope) throw;
    why = e.what();
    return std::nullopt;
  }
}

int cmd_dim(const CliConfig& c, const RingSpec& spec, std::ostream& out) {
  const IdealGraph g = build_graph(spec);
  const DistanceMatrix d = all_pairs_distances(g);
  const ResolvingResult exact = metric_dimension_exact(g, d, budget_of(c));
  std::string why;
  const auto predicted = try_predict([&] { return predicted_metric_dimension(spec); }, why);
  std::vector<IdealVector> basis;
  if (predicted) basis = predicted_basis(spec);
  const auto computed = ideals_of(g, exact.basis);
  if (c.format == Format::kJson) {
    json j;
    j["spec"] = spec.to_string();
    j["dim"] = exact.dimension;
    j["basis"] = levels_json(computed);
    j["predicted"] = predicted ? json(*predicted) : json(nullptr);
    j["predicted_basis"] = predicted ? levels_json(basis) : json(nullptr);
    if (!predicted) j["note"] = why;
    out << j.dump() << "\n";
    return kExitOk;
  }
  out << "dim=" << exact.dimension;
  if (predicted) {
    out << " predicted=" << *predicted << " basis=" << label_set(spec, basis) << "\n";
  } else {
    out << " predicted=out-of-scope\n  note: " << why << "\n";
  }
  out << "computed_basis=" << label_set(spec, computed) << "\n";
  return kExitOk;
}

int cmd_sdim(const CliConfig& c, const RingSpec& spec, std::ostream& out) {
  const IdealGraph g = build_graph(spec);
  const DistanceMatrix d = all_pairs_distances(g);
  const StrongDimensionResult sd = strong_metric_dimension(g, d, budget_of(c));
  std::string why;
  const auto predicted = try_predict([&] { return predicted_sdim(spec); }, why);
  const auto cover = ideals_of(g, sd.vertex_cover);
  if (c.format == Format::kJson) {
    json j;
    j["spec"] = spec.to_string();
    j["sdim"] = sd.dimension;
    j["srg_vertex_count"] = sd.srg_vertices;
    j["beta"] = sd.independence;
    j["basis"] = levels_json(cover);
    j["independent_set"] = levels_json(ideals_of(g, sd.independent_set));
    j["predicted"] = predicted ? json(*predicted) : json(nullptr);
    if (!predicted) j["note"] = why;
    out << j.dump() << "\n";
    return kExitOk;
  }
  out << "sdim=" << sd.dimension << " predicted=";
  if (predicted) {
    out << *predicted << "\n";
  } else {
    out << "out-of-scope\n  note: " << why << "\n";
  }
  out << "srg_vertices=" << sd.srg_vertices << " beta=" << sd.independence
      << " basis=" << label_set(spec, cover) << "\n";
  return kExitOk;
}

int verdict_status(Verdict v) { return v == Verdict::kFail ? kExitFail : kExitOk; }

int cmd_verify(const CliConfig& c, const RingSpec& spec, std::ostream& out) {
  VerifyOptions opts;
  opts.budget = budget_of(c);
  const VerificationReport r = verify_spec(spec, opts);
  if (c.format == Format::kJson) {
    out << to_json_line(r) << "\n";
  } else {
    out << to_text(r);
  }
  return verdict_status(r.verdict);
}

int cmd_sweep(const CliConfig& c, std::ostream& out, std::ostream& err) {
  SweepGrid grid;
  grid.max_fields = c.sweep_max_fields;
  grid.mixed_max_fields = std::min(c.sweep_max_fields, 3);
  grid.max_chain_length = c.sweep_max_chain;
  grid.mixed_max_chain_length = c.sweep_max_chain;
  VerifyOptions opts;
  opts.budget = budget_of(c);
  const bool json_out = c.format == Format::kJson;
  if (!json_out) out << table_header() << "\n";
  const SweepResult res = sweep(grid, opts, [&](std::size_t i, std::size_t n,
                                                const VerificationReport& r) {
    err << "[" << (i + 1) << "/" << n << "] " << r.spec.to_string() << " "
        << to_string(r.verdict) << "\n";
    if (json_out) {
      out << to_json_line(r) << "\n";
    } else {
      out << table_row(r) << "\n";
      for (const auto& f : r.failures) out << "    " << f << "\n";
    }
    out.flush();
  });
  if (json_out) {
    out << to_json_line(res.summary) << "\n";
  } else {
    out << to_text(res.summary) << "\n";
  }
  return res.summary.failed > 0 ? kExitFail : kExitOk;
}

int dispatch(const CliConfig& c, std::ostream& out, std::ostream& err) {
  if (c.format == Format::kDot && c.command != Command::kGraph &&
      c.command != Command::kSrg) {
    throw UsageError("--format dot is only valid for graph and srg");
  }
  if (c.command == Command::kSweep) return cmd_sweep(c, out, err);
  if (c.spec.empty()) throw UsageError("--spec is required");
  RingSpec spec = [&] {
    try {
      return parse_ring_spec(c.spec);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }();
  switch (c.command) {
    case Command::kInfo: return cmd_info(c, spec, out);
    case Command::kGraph: return cmd_graph(c, spec, out);
    case Command::kDim: return cmd_dim(c, spec, out);
    case Command::kSdim: return cmd_sdim(c, spec, out);
    case Command::kSrg: return cmd_srg(c, spec, out);
    case Command::kVerify: return cmd_verify(c, spec, out);
    case Command::kSweep: break;
  }
  return kExitOk;
}

}  // namespace

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
  std::ofstream file;
  std::ostream* sink = &out;
  if (!config.out.empty()) {
    file.open(config.out);
    if (!file) {
      err << "error: cannot open " << config.out << " for writing\n";
      return kExitUsage;
    }
    sink = &file;
  }
  try {
    return dispatch(config, *sink, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << kGrammar << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::kBudgetExceeded ? kExitBudget : kExitFail;
  }
}

int main_with_args(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"Inclusion ideal graphs: metric and strong metric dimension"};
  app.name("idealgraph");
  CliConfig config;
  const std::map<std::string, Command> commands{
      {"info", Command::kInfo}, {"graph", Command::kGraph},
      {"dim", Command::kDim},   {"sdim", Command::kSdim},
      {"srg", Command::kSrg},   {"verify", Command::kVerify},
      {"sweep", Command::kSweep}};
  const std::map<std::string, Format> formats{
      {"text", Format::kText}, {"json", Format::kJson}, {"dot", Format::kDot}};
  std::uint64_t budget = 0;

  std::string command_name;
  std::string format_name = "text";
  app.add_option("command", command_name, "info|graph|dim|sdim|srg|verify|sweep")
      ->required()
      ->type_name("COMMAND")
      ->check(CLI::IsMember(commands, CLI::ignore_case).description(""));
  app.add_option("--spec", config.spec, "ring spec, e.g. C2,F,F");
  app.add_option("--format", format_name, "text|json|dot")
      ->type_name("FORMAT")
      ->check(CLI::IsMember(formats, CLI::ignore_case).description(""));
  auto* budget_opt =
      app.add_option("--budget", budget, "search step budget")->check(CLI::PositiveNumber);
  app.add_option("--sweep-max-fields", config.sweep_max_fields,
                 "largest field count in the sweep")
      ->check(CLI::Range(0, 12));
  app.add_option("--sweep-max-chain", config.sweep_max_chain,
                 "largest chain length in the sweep")
      ->check(CLI::Range(0, 8));
  app.add_option("--out", config.out, "write the document here");

  // CLI11 wants argv order without the program name, reversed.
  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help() << kGrammar << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << kGrammar << "\n";
    return kExitUsage;
  }
  config.command = commands.at(CLI::detail::to_lower(command_name));
  config.format = formats.at(CLI::detail::to_lower(format_name));
  if (*budget_opt) config.budget = budget;
  return run(config, out, err);
}

}  // namespace idealgraph::cli
