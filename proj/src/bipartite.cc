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

#include <stdexcept>

#include "conflictfair/checks.h"
#include "conflictfair/graph_classes.h"

namespace conflictfair {

Bipartition bipartition_for(const Instance& instance) {
  const ConflictGraph& graph = instance.graph();
  const auto sides = graph.two_coloring();
  if (!sides) throw InvalidInput("conflict graph is not bipartite");

  const std::size_t m = graph.m();
  GoodSet isolated(m);
  GoodSet side0(m);
  GoodSet side1(m);
  for (Good g = 0; g < m; ++g) {
    if (graph.degree(g) == 0) {
      isolated.insert(g);
    } else {
      ((*sides)[g] == 0 ? side0 : side1).insert(g);
    }
  }
  const ValuationModel& v = instance.valuation(0);
  // If side0 + isolated is lighter than side1, then side1 + isolated is
  // heavier than side0 by monotonicity.
  if (v.evaluate(side0 | isolated) >= v.evaluate(side1)) {
    return {side0 | isolated, side1};
  }
  return {side1 | isolated, side0};
}

ChainOutcome bipartite_ef1(const Instance& instance, const std::optional<Bipartition>& parts) {
  if (instance.agents() != 2 || !instance.identical() || instance.mode() != Mode::kGoods) {
    throw InvalidInput("bipartite solver needs two agents with one goods-mode valuation");
  }
  const ConflictGraph& graph = instance.graph();
  const Bipartition split = parts ? *parts : bipartition_for(instance);
  if (split.heavy.universe() != graph.m() || split.light.universe() != graph.m() ||
      split.heavy.intersects(split.light) || (split.heavy | split.light).size() != graph.m()) {
    throw InvalidInput("parts do not partition the goods");
  }
  if (!is_independent_set(graph, split.heavy) || !is_independent_set(graph, split.light)) {
    throw InvalidInput("parts are not independent sets");
  }
  const ValuationModel& v = instance.valuation(0);
  if (v.evaluate(split.heavy) < v.evaluate(split.light)) {
    throw InvalidInput("first part is lighter than the second; swap the parts");
  }
  for (Good g : split.light) {
    if (graph.degree(g) == 0) {
      throw InvalidInput("isolated good " + std::to_string(g) + " must be in the first part");
    }
  }

  const std::vector<Good> source = split.heavy.to_vector();
  ChainOutcome outcome = chain_ef1(instance, source);
  if (!outcome.found()) {
    throw std::logic_error("bipartite chain produced no EF1 step");
  }
  return outcome;
}

}  // namespace conflictfair
