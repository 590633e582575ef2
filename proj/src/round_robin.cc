// Copyright 2026 The conflictfair Authors
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

#include <string>

#include "conflictfair/graph_classes.h"

namespace conflictfair {

Allocation round_robin_small(const Instance& original) {
  const Instance instance = original.to_goods();
  const std::size_t n = instance.agents();
  const std::size_t m = instance.m();
  if (m > n + 1) {
    throw InvalidInput("round robin needs m <= n + 1, got m = " + std::to_string(m) +
                       ", n = " + std::to_string(n));
  }
  Allocation allocation(n, m);
  GoodSet remaining = GoodSet::full(m);
  for (std::size_t agent = 0; agent < n && !remaining.empty(); ++agent) {
    const ValuationModel& v = instance.valuation(agent);
    Good best = *remaining.begin();
    Value best_value = v.evaluate_single(best);
    for (Good g : remaining) {
      Value value = v.evaluate_single(g);
      if (value > best_value) {
        best = g;
        best_value = std::move(value);
      }
    }
    allocation.bundles[agent].insert(best);
    remaining.erase(best);
  }
  for (Good leftover : remaining) {
    for (std::size_t agent = 0; agent < n; ++agent) {
      if (!instance.graph().neighbors(leftover).intersects(allocation.bundles[agent])) {
        allocation.bundles[agent].insert(leftover);
        break;
      }
    }
  }
  return allocation;
}

}  // namespace conflictfair
