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

// Helpers shared by the closed-form witness constructions.

#ifndef IDEALGRAPH_SRC_SLOTS_HPP_
#define IDEALGRAPH_SRC_SLOTS_HPP_

#include <cstddef>
#include <vector>

#include "idealgraph/ring_model.hpp"

namespace idealgraph::detail {

inline std::vector<std::size_t> chain_slots(const RingSpec& spec) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < spec.component_count(); ++i) {
    if (!spec.is_field(i)) out.push_back(i);
  }
  return out;
}

inline std::vector<std::size_t> field_slots(const RingSpec& spec) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < spec.component_count(); ++i) {
    if (spec.is_field(i)) out.push_back(i);
  }
  return out;
}

inline IdealVector single_slot(const RingSpec& spec, std::size_t slot,
                               int level) {
  std::vector<int> levels(spec.component_count(), 0);
  levels[slot] = level;
  return IdealVector(std::move(levels));
}

}  // namespace idealgraph::detail

#endif  // IDEALGRAPH_SRC_SLOTS_HPP_
