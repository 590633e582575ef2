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

// Chain of maximal two-agent allocations grown from a maximal independent set.
//
// Given S = (s_1, ..., s_k), every other good t gets the positions
// p_t <= q_t of its first and last neighbor in S. Two side sets are built
// greedily: X_1 scanning by increasing q_t, X_2 by decreasing p_t. Step i is
//
//   A_1 = {s_{i+1}..s_k} + {t in X_1 : q_t <= i}
//   A_2 = {s_1..s_i}     + {t in X_2 : p_t >  i}
//
// so each step moves s_i from agent 1 to agent 2, every step is a valid
// maximal allocation, and consecutive steps are ordered adjacent. When v(S)
// dominates v(X_1) and v(X_2) the value difference changes sign along the
// chain and some step is EF1.

#ifndef CONFLICTFAIR_CHAIN_H_
#define CONFLICTFAIR_CHAIN_H_

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "conflictfair/good_set.h"
#include "conflictfair/graph.h"
#include "conflictfair/instance.h"

namespace conflictfair {

struct Chain {
  std::vector<Allocation> steps;  // A^(0) .. A^(k)
  std::vector<Good> source;       // s_1 .. s_k
  GoodSet x1;
  GoodSet x2;
  // 1-based positions in `source`; 0 for goods of S.
  std::vector<std::size_t> first_neighbor;  // p_t
  std::vector<std::size_t> last_neighbor;   // q_t
};

// Secondary scan keys among goods with equal q_t (X_1, ascending) and equal
// p_t (X_2, descending). Empty vectors mean the good index itself.
struct ChainTieBreak {
  std::vector<std::size_t> x1_key;
  std::vector<std::size_t> x2_key;
};

struct ChainOutcome {
  std::optional<std::size_t> step;  // empty: no EF1 step (NULL)
  Chain chain;

  bool found() const { return step.has_value(); }
  const Allocation& allocation() const { return chain.steps.at(*step); }
};

// Full chain without EF1 short-circuit. Throws InvalidInput if `source` is not
// a maximal independent set (or repeats a good).
Chain build_chain(const ConflictGraph& graph, std::span<const Good> source,
                  const ChainTieBreak& tie_break = {});

// Requires n = 2, identical valuation, goods mode (chores callers negate
// first). Returns the first EF1 step or an empty step.
ChainOutcome chain_ef1(const Instance& instance, std::span<const Good> source);

// Index of the first goods-EF1 allocation in `steps` under `model`.
std::optional<std::size_t> first_ef1_step(const ValuationModel& model,
                                          const std::vector<Allocation>& steps);

// Solves a two-agent identical-valuation goods instance.
using IdenticalSolver = std::function<Allocation(const Instance&)>;

// Solves the identical problem under agent 1's valuation (negated in chores
// mode) with `solver` (swap_ef1 when empty), then gives agent 2 the bundle it
// values more under its own valuation. Requires n = 2.
Allocation cut_and_choose(const Instance& instance, const IdenticalSolver& solver = {});

}  // namespace conflictfair

#endif  // CONFLICTFAIR_CHAIN_H_
