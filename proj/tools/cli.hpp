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

#ifndef IDEALGRAPH_TOOLS_CLI_HPP_
#define IDEALGRAPH_TOOLS_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace idealgraph::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

enum class Command { kInfo, kGraph, kDim, kSdim, kSrg, kVerify, kSweep };
enum class Format { kText, kJson, kDot };

struct CliConfig {
  Command command = Command::kInfo;
  std::string spec;
  Format format = Format::kText;
  std::optional<std::uint64_t> budget;
  int sweep_max_fields = 5;
  int sweep_max_chain = 3;
  std::string out;  // empty: standard output
};

/// Runs one command. Documents go to `out` (or the --out file), progress
/// and diagnostics to `err`. Returns the process exit status.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and runs. Usage errors return kExitUsage.
int main_with_args(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err);

}  // namespace idealgraph::cli

#endif  // IDEALGRAPH_TOOLS_CLI_HPP_
