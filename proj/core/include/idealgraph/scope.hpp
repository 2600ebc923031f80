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

#ifndef IDEALGRAPH_SCOPE_HPP_
#define IDEALGRAPH_SCOPE_HPP_

#include <cstdint>
#include <string_view>

#include "idealgraph/ring_model.hpp"

namespace idealgraph {

// Shape of a ring as far as the closed-form results care. Components may
// appear in any order; only the number of fields and of chain rings count.
enum class RingFamily {
  kFieldProduct,       // only fields, at least three of them
  kChainProduct,       // at least two chain rings, no fields
  kMixedSingleChain,   // one chain ring and at least one field
  kMixedMultiChain,    // at least two chain rings and at least one field
  kUncovered,          // single component, or exactly two fields
};

RingFamily classify(const RingSpec& spec);
std::string_view to_string(RingFamily family);

/// Throws Error(kSpecOutOfTheoremScope) naming `what`.
[[noreturn]] void out_of_scope(const RingSpec& spec, std::string_view what);

/// Exact searches charge one step per elementary check and throw
/// Error(kBudgetExceeded) once `max_steps` is passed.
struct SearchBudget {
  std::uint64_t max_steps = 100'000'000;
};

class StepCounter {
 public:
  explicit StepCounter(const SearchBudget& budget) : limit_(budget.max_steps) {}

  void charge(std::uint64_t steps = 1);
  std::uint64_t used() const { return used_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

}  // namespace idealgraph

#endif  // IDEALGRAPH_SCOPE_HPP_
