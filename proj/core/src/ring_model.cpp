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

#include "idealgraph/ring_model.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <numeric>

#include "idealgraph/errors.hpp"

namespace idealgraph {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kEmptySpec: return "EmptySpec";
    case ErrorCode::kOverflowingSpec: return "OverflowingSpec";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kNoComplementVertex: return "NoComplementVertex";
    case ErrorCode::kNotAField: return "NotAField";
    case ErrorCode::kInvalidIdeal: return "InvalidIdeal";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kEmptyGraph: return "EmptyGraph";
    case ErrorCode::kVertexInSet: return "VertexInSet";
    case ErrorCode::kInvalidVertex: return "InvalidVertex";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kSpecOutOfTheoremScope: return "SpecOutOfTheoremScope";
    case ErrorCode::kMalformedDocument: return "MalformedDocument";
  }
  return "Unknown";
}

namespace {

// prod(n_i + 2), or nullopt-like max when it passes `bound`.
std::uint64_t ideal_count_capped(const std::vector<int>& lengths,
                                 std::uint64_t bound) {
  std::uint64_t product = 1;
  for (int n : lengths) {
    const auto factor = static_cast<std::uint64_t>(n) + 2;
    if (product > (bound + 2) / factor) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    product *= factor;
  }
  return product;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

[[noreturn]] void syntax_error(std::string_view token) {
  throw Error(ErrorCode::kSyntaxError,
              "bad ring component '" + std::string(token) +
                  "'; expected F or C<k> with k >= 1, e.g. \"C2,F,F\"");
}

}  // namespace

RingSpec::RingSpec(std::vector<int> chain_lengths, std::uint64_t vertex_bound)
    : chain_lengths_(std::move(chain_lengths)) {
  if (chain_lengths_.empty()) {
    throw Error(ErrorCode::kEmptySpec, "ring spec has no components");
  }
  for (int n : chain_lengths_) {
    if (n < 0) {
      throw Error(ErrorCode::kSyntaxError, "negative chain length");
    }
  }
  const std::uint64_t ideals = ideal_count_capped(chain_lengths_, vertex_bound);
  if (ideals == std::numeric_limits<std::uint64_t>::max() ||
      ideals - 2 > vertex_bound) {
    throw Error(ErrorCode::kOverflowingSpec,
                "ring spec has more than " + std::to_string(vertex_bound) +
                    " non-trivial ideals");
  }
}

std::size_t RingSpec::field_count() const {
  return static_cast<std::size_t>(
      std::count(chain_lengths_.begin(), chain_lengths_.end(), 0));
}

std::size_t RingSpec::chain_count() const {
  return component_count() - field_count();
}

int RingSpec::chain_length_sum() const {
  return std::accumulate(chain_lengths_.begin(), chain_lengths_.end(), 0);
}

std::string RingSpec::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < chain_lengths_.size(); ++i) {
    if (i > 0) out += ',';
    out += chain_lengths_[i] == 0 ? std::string("F")
                                  : "C" + std::to_string(chain_lengths_[i]);
  }
  return out;
}

RingSpec parse_ring_spec(std::string_view text, std::uint64_t vertex_bound) {
  if (trim(text).empty()) {
    throw Error(ErrorCode::kEmptySpec, "empty ring spec");
  }
  std::vector<int> lengths;
  while (true) {
    const auto comma = text.find(',');
    const std::string_view token = trim(text.substr(0, comma));
    if (token == "F") {
      lengths.push_back(0);
    } else if (token.size() >= 2 && token.front() == 'C') {
      int k = 0;
      const char* first = token.data() + 1;
      const char* last = token.data() + token.size();
      auto [ptr, ec] = std::from_chars(first, last, k);
      if (ec != std::errc() || ptr != last || k < 1 || *first == '+') {
        syntax_error(token);
      }
      lengths.push_back(k);
    } else {
      syntax_error(token);
    }
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return RingSpec(std::move(lengths), vertex_bound);
}

std::uint64_t vertex_count(const RingSpec& spec) {
  std::uint64_t product = 1;
  for (int n : spec.chain_lengths()) product *= static_cast<std::uint64_t>(n) + 2;
  return product - 2;
}

bool is_valid_ideal(const RingSpec& spec, const IdealVector& ideal) {
  if (ideal.size() != spec.component_count()) return false;
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    if (ideal[i] < 0 || ideal[i] > spec.top_level(i)) return false;
  }
  return true;
}

bool is_nontrivial(const RingSpec& spec, const IdealVector& ideal) {
  if (!is_valid_ideal(spec, ideal)) return false;
  bool all_zero = true;
  bool all_top = true;
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    all_zero = all_zero && ideal[i] == 0;
    all_top = all_top && ideal[i] == spec.top_level(i);
  }
  return !all_zero && !all_top;
}

std::vector<IdealVector> enumerate_ideals(const RingSpec& spec) {
  const std::size_t m = spec.component_count();
  std::vector<IdealVector> out;
  out.reserve(static_cast<std::size_t>(vertex_count(spec)));
  // Odometer in lexicographic order, last component fastest.
  std::vector<int> levels(m, 0);
  while (true) {
    IdealVector ideal(levels);
    if (is_nontrivial(spec, ideal)) out.push_back(std::move(ideal));
    std::size_t pos = m;
    while (pos > 0) {
      --pos;
      if (levels[pos] < spec.top_level(pos)) {
        ++levels[pos];
        break;
      }
      levels[pos] = 0;
      if (pos == 0) return out;
    }
  }
}

bool properly_contains(const IdealVector& a, const IdealVector& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "ideal vectors have different component counts");
  }
  bool differs = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b[i] > a[i]) return false;
    differs = differs || b[i] != a[i];
  }
  return differs;
}

IdealVector complement(const RingSpec& spec, const IdealVector& ideal) {
  if (!is_valid_ideal(spec, ideal)) {
    throw Error(ErrorCode::kInvalidIdeal, "ideal does not match ring spec");
  }
  std::vector<int> levels(ideal.size(), 0);
  bool any = false;
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    if (ideal[i] == 0) {
      levels[i] = spec.top_level(i);
      any = true;
    }
  }
  if (!any) {
    throw Error(ErrorCode::kNoComplementVertex,
                "ideal has no zero component; its complement is the zero ideal");
  }
  return IdealVector(std::move(levels));
}

bool is_extremal(const RingSpec& spec, const IdealVector& ideal) {
  if (!is_valid_ideal(spec, ideal)) {
    throw Error(ErrorCode::kInvalidIdeal, "ideal does not match ring spec");
  }
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    if (ideal[i] != 0 && ideal[i] != spec.top_level(i)) return false;
  }
  return true;
}

std::size_t zero_component_count(const IdealVector& ideal) {
  return static_cast<std::size_t>(
      std::count(ideal.levels().begin(), ideal.levels().end(), 0));
}

IdealVector minimal_ideal(const RingSpec& spec, std::size_t component) {
  if (component >= spec.component_count()) {
    throw Error(ErrorCode::kInvalidIdeal, "component index out of range");
  }
  if (!spec.is_field(component)) {
    throw Error(ErrorCode::kNotAField,
                "component " + std::to_string(component + 1) +
                    " is a chain ring, not a field");
  }
  std::vector<int> levels(spec.component_count(), 0);
  levels[component] = 1;
  return IdealVector(std::move(levels));
}

std::string render_ideal(const RingSpec& spec, const IdealVector& ideal,
                         std::string_view separator) {
  std::string out;
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    if (i > 0) out += separator;
    const int level = ideal[i];
    if (level == 0) {
      out += '0';
    } else if (level == spec.top_level(i)) {
      out += spec.is_field(i) ? 'F' : 'R';
    } else {
      out += 'I' + std::to_string(level);
    }
  }
  return out;
}

}  // namespace idealgraph
