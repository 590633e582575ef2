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

#include "conflictfair/swap.h"

#include <stdexcept>
#include <string>

#include "conflictfair/chain.h"
#include "conflictfair/checks.h"

namespace conflictfair {

SwapResult swap_ef1(const Instance& instance) {
  if (instance.agents() != 2 || !instance.identical() || instance.mode() != Mode::kGoods) {
    throw InvalidInput("swap solver needs two agents with one goods-mode valuation");
  }
  const ConflictGraph& graph = instance.graph();
  const ValuationModel& v = instance.valuation(0);

  GoodSet seed(graph.m());
  if (graph.m() > 0) {
    Good best = 0;
    Value best_value = v.evaluate_single(0);
    for (Good g = 1; g < graph.m(); ++g) {
      Value value = v.evaluate_single(g);
      if (value > best_value) {
        best = g;
        best_value = std::move(value);
      }
    }
    seed.insert(best);
  }

  SwapResult result;
  GoodSet source = complete_to_maximal_is(graph, seed);
  while (true) {
    const std::vector<Good> order = source.to_vector();
    ChainOutcome outcome = chain_ef1(instance, order);
    SwapIteration iteration;
    iteration.source = source;
    iteration.source_value = v.evaluate(source);
    if (outcome.found()) {
      iteration.terminal = true;
      result.trace.iterations.push_back(std::move(iteration));
      result.allocation = outcome.allocation();
      result.step = *outcome.step;
      return result;
    }
    Value side1 = v.evaluate(outcome.chain.x1);
    Value side2 = v.evaluate(outcome.chain.x2);
    iteration.chosen_side = side2 > side1 ? 2 : 1;
    iteration.chosen = iteration.chosen_side == 1 ? outcome.chain.x1 : outcome.chain.x2;
    iteration.chosen_value = iteration.chosen_side == 1 ? side1 : side2;

    GoodSet next = complete_to_maximal_is(graph, iteration.chosen);
    if (v.evaluate(next) <= iteration.source_value) {
      // Impossible for a monotone valuation.
      throw std::logic_error("swap solver failed to escalate from " + source.to_string());
    }
    result.trace.iterations.push_back(std::move(iteration));
    source = std::move(next);
  }
}

std::size_t iteration_bound_additive(std::size_t m) {
  if (m < 2) throw InvalidInput("additive iteration bound needs m >= 2");
  // Smallest k with (m/(m-1))^k >= m, i.e. m^k >= m (m-1)^k.
  const Integer big_m(static_cast<unsigned long>(m));
  const Integer below(static_cast<unsigned long>(m - 1));
  Integer lhs = 1;
  Integer rhs = big_m;
  std::size_t k = 0;
  while (lhs < rhs) {
    lhs *= big_m;
    rhs *= below;
    ++k;
  }
  return k + 1;
}

}  // namespace conflictfair
