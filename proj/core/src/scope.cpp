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

#include "idealgraph/scope.hpp"

#include <string>

#include "idealgraph/errors.hpp"

namespace idealgraph {

RingFamily classify(const RingSpec& spec) {
  const std::size_t fields = spec.field_count();
  const std::size_t chains = spec.chain_count();
  if (chains == 0) {
    return fields >= 3 ? RingFamily::kFieldProduct : RingFamily::kUncovered;
  }
  if (fields == 0) {
    return chains >= 2 ? RingFamily::kChainProduct : RingFamily::kUncovered;
  }
  return chains == 1 ? RingFamily::kMixedSingleChain
                     : RingFamily::kMixedMultiChain;
}

std::string_view to_string(RingFamily family) {
  switch (family) {
    case RingFamily::kFieldProduct: return "field-product";
    case RingFamily::kChainProduct: return "chain-product";
    case RingFamily::kMixedSingleChain: return "mixed-single-chain";
    case RingFamily::kMixedMultiChain: return "mixed-multi-chain";
    case RingFamily::kUncovered: return "uncovered";
  }
  return "uncovered";
}

void out_of_scope(const RingSpec& spec, std::string_view what) {
  throw Error(ErrorCode::kSpecOutOfTheoremScope,
              "no closed form for " + std::string(what) + " of ring " +
                  spec.to_string() + " (" +
                  std::string(to_string(classify(spec))) + ")");
}

void StepCounter::charge(std::uint64_t steps) {
  used_ += steps;
  if (used_ > limit_) {
    throw Error(ErrorCode::kBudgetExceeded,
                "search exceeded its budget of " + std::to_string(limit_) +
                    " steps");
  }
}

}  // namespace idealgraph
