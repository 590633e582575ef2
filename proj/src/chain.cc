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

#include "conflictfair/chain.h"

#include <algorithm>
#include <string>

#include "conflictfair/checks.h"
#include "conflictfair/swap.h"

namespace conflictfair {
namespace {

std::size_t key_or_index(const std::vector<std::size_t>& keys, Good g) {
  return keys.empty() ? g : keys.at(g);
}

GoodSet greedy_side(const ConflictGraph& graph, const std::vector<Good>& order) {
  GoodSet side(graph.m());
  for (Good t : order) {
    if (!graph.neighbors(t).intersects(side)) side.insert(t);
  }
  return side;
}

void require_two_agent_identical_goods(const Instance& instance) {
  if (instance.agents() != 2) {
    throw InvalidInput("two agents required, instance has " + std::to_string(instance.agents()));
  }
  if (!instance.identical()) throw InvalidInput("identical valuations required");
  if (instance.mode() != Mode::kGoods) {
    throw InvalidInput("goods mode required; negate chores instances first");
  }
}

}  // namespace

Chain build_chain(const ConflictGraph& graph, std::span<const Good> source,
                  const ChainTieBreak& tie_break) {
  const std::size_t m = graph.m();
  GoodSet in_source(m);
  for (Good s : source) {
    if (in_source.contains(s)) throw InvalidInput("good " + std::to_string(s) + " repeated in S");
    in_source.insert(s);
  }
  if (!is_independent_set(graph, in_source)) {
    throw InvalidInput("S = " + in_source.to_string() + " is not independent");
  }

  Chain chain;
  chain.source.assign(source.begin(), source.end());
  chain.first_neighbor.assign(m, 0);
  chain.last_neighbor.assign(m, 0);
  std::vector<std::size_t> position(m, 0);
  for (std::size_t i = 0; i < source.size(); ++i) position[source[i]] = i + 1;

  std::vector<Good> rest;
  for (Good t = 0; t < m; ++t) {
    if (in_source.contains(t)) continue;
    std::size_t p = 0;
    std::size_t q = 0;
    for (Good s : graph.neighbors(t)) {
      const std::size_t pos = position[s];
      if (pos == 0) continue;
      if (p == 0 || pos < p) p = pos;
      q = std::max(q, pos);
    }
    if (p == 0) {
      throw InvalidInput("S = " + in_source.to_string() + " is not maximal: good " +
                         std::to_string(t) + " has no neighbor in S");
    }
    chain.first_neighbor[t] = p;
    chain.last_neighbor[t] = q;
    rest.push_back(t);
  }

  std::vector<Good> by_last = rest;
  std::stable_sort(by_last.begin(), by_last.end(), [&](Good a, Good b) {
    if (chain.last_neighbor[a] != chain.last_neighbor[b]) {
      return chain.last_neighbor[a] < chain.last_neighbor[b];
    }
    return key_or_index(tie_break.x1_key, a) < key_or_index(tie_break.x1_key, b);
  });
  std::vector<Good> by_first = rest;
  std::stable_sort(by_first.begin(), by_first.end(), [&](Good a, Good b) {
    if (chain.first_neighbor[a] != chain.first_neighbor[b]) {
      return chain.first_neighbor[a] > chain.first_neighbor[b];
    }
    return key_or_index(tie_break.x2_key, a) > key_or_index(tie_break.x2_key, b);
  });
  chain.x1 = greedy_side(graph, by_last);
  chain.x2 = greedy_side(graph, by_first);

  const std::size_t k = source.size();
  chain.steps.reserve(k + 1);
  for (std::size_t i = 0; i <= k; ++i) {
    Allocation step(2, m);
    for (std::size_t j = 0; j < k; ++j) step.bundles[j < i ? 1 : 0].insert(source[j]);
    for (Good t : chain.x1) {
      if (chain.last_neighbor[t] <= i) step.bundles[0].insert(t);
    }
    for (Good t : chain.x2) {
      if (chain.first_neighbor[t] > i) step.bundles[1].insert(t);
    }
    chain.steps.push_back(std::move(step));
  }
  return chain;
}

std::optional<std::size_t> first_ef1_step(const ValuationModel& model,
                                          const std::vector<Allocation>& steps) {
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (is_ef1_pair(model, steps[i].bundles[0], steps[i].bundles[1])) return i;
  }
  return std::nullopt;
}

ChainOutcome chain_ef1(const Instance& instance, std::span<const Good> source) {
  require_two_agent_identical_goods(instance);
  ChainOutcome outcome;
  outcome.chain = build_chain(instance.graph(), source);
  outcome.step = first_ef1_step(instance.valuation(0), outcome.chain.steps);
  return outcome;
}

Allocation cut_and_choose(const Instance& instance, const IdenticalSolver& solver) {
  if (instance.agents() != 2) {
    throw InvalidInput("cut-and-choose needs two agents, instance has " +
                       std::to_string(instance.agents()));
  }
  const ValuationModel& cutter = instance.valuation(0);
  const Instance identical(instance.graph(), 2,
                           instance.mode() == Mode::kGoods ? cutter
                                                           : ValuationModel::negated(cutter),
                           Mode::kGoods);
  Allocation allocation = solver ? solver(identical) : swap_ef1(identical).allocation;

  // The chooser compares under its own, unnegated valuation.
  const ValuationModel& chooser = instance.valuation(1);
  if (chooser.evaluate(allocation.bundles[1]) < chooser.evaluate(allocation.bundles[0])) {
    std::swap(allocation.bundles[0], allocation.bundles[1]);
  }
  return allocation;
}

}  // namespace conflictfair
