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

// Definitional checkers: validity, maximality, EF1 and the small helpers the
// solvers are built from. All functions are pure.

#ifndef CONFLICTFAIR_CHECKS_H_
#define CONFLICTFAIR_CHECKS_H_

#include <vector>

#include "conflictfair/good_set.h"
#include "conflictfair/graph.h"
#include "conflictfair/instance.h"
#include "conflictfair/valuation.h"
#include "conflictfair/value.h"

namespace conflictfair {

Value evaluate(const ValuationModel& model, const GoodSet& subset);

// min over g in S of v(S \ {g}); 0 for the empty set.
Value value_minus_one(const ValuationModel& model, const GoodSet& subset);

bool is_independent_set(const ConflictGraph& graph, const GoodSet& subset);

struct AllocationReport {
  bool disjoint = false;
  std::vector<bool> independent;
  bool wellformed = false;
};

// Throws InvalidInput if the bundle count is not n or a bundle is over the
// wrong universe.
AllocationReport validate_allocation(const Instance& instance, const Allocation& allocation);

// Every unallocated good is adjacent to some good of every bundle.
bool is_maximal(const Instance& instance, const Allocation& allocation);

// Goods: for all i, j either A_j is empty or v_i(A_i) >= v_i(A_j \ {g}) for
// some g in A_j. Chores: A_i empty or v_i(A_i \ {c}) >= v_i(A_j) for some c.
bool is_ef1(const Instance& instance, const Allocation& allocation);

// Goods-mode EF1 for two bundles under one valuation, both directions.
bool is_ef1_pair(const ValuationModel& model, const GoodSet& first, const GoodSet& second);

// |A_1 \ A'_1| <= 1 and |A'_2 \ A_2| <= 1.
bool is_ordered_adjacent(const Allocation& before, const Allocation& after);

// Grows an independent seed to a maximal independent set by scanning goods in
// ascending index. Throws InvalidInput if the seed is not independent.
GoodSet complete_to_maximal_is(const ConflictGraph& graph, const GoodSet& seed);

// No good outside `set` can be added while staying independent.
bool is_maximal_independent_set(const ConflictGraph& graph, const GoodSet& set);

}  // namespace conflictfair

#endif  // CONFLICTFAIR_CHECKS_H_
