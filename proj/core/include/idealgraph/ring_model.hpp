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

// Rings with finitely many ideals, modelled as products of finite chain
// rings and fields. Only the ideal lattice is represented: component i has
// ideals 0 = level 0 < level 1 < ... < level n_i < level n_i + 1 = R_i.

#ifndef IDEALGRAPH_RING_MODEL_HPP_
#define IDEALGRAPH_RING_MODEL_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace idealgraph {

inline constexpr std::uint64_t kDefaultVertexBound = std::uint64_t{1} << 24;

class RingSpec {
 public:
  /// Validates and stores chain lengths. Throws Error(kEmptySpec) for an
  /// empty list, Error(kSyntaxError) for a negative length and
  /// Error(kOverflowingSpec) when the vertex count exceeds `vertex_bound`.
  explicit RingSpec(std::vector<int> chain_lengths,
                    std::uint64_t vertex_bound = kDefaultVertexBound);
  RingSpec(std::initializer_list<int> chain_lengths)
      : RingSpec(std::vector<int>(chain_lengths)) {}

  const std::vector<int>& chain_lengths() const { return chain_lengths_; }
  std::size_t component_count() const { return chain_lengths_.size(); }
  int chain_length(std::size_t i) const { return chain_lengths_.at(i); }
  bool is_field(std::size_t i) const { return chain_lengths_.at(i) == 0; }
  /// Level of the whole component ring R_i.
  int top_level(std::size_t i) const { return chain_lengths_.at(i) + 1; }

  std::size_t field_count() const;
  std::size_t chain_count() const;  // components that are not fields
  int chain_length_sum() const;

  /// Grammar form, e.g. "C2,F,F".
  std::string to_string() const;

  friend bool operator==(const RingSpec&, const RingSpec&) = default;

 private:
  std::vector<int> chain_lengths_;
};

/// Parses `component ("," component)*` where component is `F` or `C<k>`,
/// k >= 1. Whitespace around tokens is ignored.
RingSpec parse_ring_spec(std::string_view text,
                         std::uint64_t vertex_bound = kDefaultVertexBound);

/// One ideal of the product ring, stored as a per-component level vector.
class IdealVector {
 public:
  IdealVector() = default;
  explicit IdealVector(std::vector<int> levels) : levels_(std::move(levels)) {}
  IdealVector(std::initializer_list<int> levels) : levels_(levels) {}

  const std::vector<int>& levels() const { return levels_; }
  std::size_t size() const { return levels_.size(); }
  int operator[](std::size_t i) const { return levels_[i]; }

  friend bool operator==(const IdealVector&, const IdealVector&) = default;
  friend auto operator<=>(const IdealVector&, const IdealVector&) = default;

 private:
  std::vector<int> levels_;
};

/// Number of non-trivial ideals, prod(n_i + 2) - 2.
std::uint64_t vertex_count(const RingSpec& spec);

/// All non-trivial ideals in lexicographic order of their level vectors.
/// This order is the vertex indexing used by every graph in the library.
std::vector<IdealVector> enumerate_ideals(const RingSpec& spec);

bool is_valid_ideal(const RingSpec& spec, const IdealVector& ideal);
bool is_nontrivial(const RingSpec& spec, const IdealVector& ideal);

/// b is a proper subset of a. Throws Error(kLengthMismatch).
bool properly_contains(const IdealVector& a, const IdealVector& b);

/// R_i in every zero slot of `ideal`, 0 in every other slot. The result is
/// always extremal. Throws Error(kNoComplementVertex) when `ideal` has no
/// zero slot, since the result would be the zero ideal.
IdealVector complement(const RingSpec& spec, const IdealVector& ideal);

/// Every level is 0 or the top of its component (the set M).
bool is_extremal(const RingSpec& spec, const IdealVector& ideal);

std::size_t zero_component_count(const IdealVector& ideal);

/// Field R_i in slot `component` (0-based), zero elsewhere. Throws
/// Error(kNotAField) if that component is a chain ring.
IdealVector minimal_ideal(const RingSpec& spec, std::size_t component);

/// Product notation, e.g. "0 x I2 x R" (separator " x ") or "0xI2xR".
/// Field slots render their top level as F, chain slots as R.
std::string render_ideal(const RingSpec& spec, const IdealVector& ideal,
                         std::string_view separator = " x ");

}  // namespace idealgraph

#endif  // IDEALGRAPH_RING_MODEL_HPP_
