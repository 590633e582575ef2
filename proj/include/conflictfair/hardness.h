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

// Instances without a maximal EF1 allocation, and the Independent Set
// reduction that embeds such an instance next to n gadget copies of a graph H.

#ifndef CONFLICTFAIR_HARDNESS_H_
#define CONFLICTFAIR_HARDNESS_H_

#include <cstddef>
#include <cstdint>

#include "conflictfair/good_set.h"
#include "conflictfair/graph.h"
#include "conflictfair/instance.h"
#include "conflictfair/oracle.h"
#include "conflictfair/value.h"

namespace conflictfair {

// n = 3: seven goods, K_{3,3} on {0,1,2} x {3,4,5} plus edges {0,6}, {3,6},
// identical table valuation. n >= 4: K_{3,n-1}, identical additive values 2
// on the left triple and 3 on the right. Neither has a maximal EF1
// allocation. Throws InvalidInput for n < 3.
Instance gen_counterexample(std::size_t n);

// Does H have an independent set of size t?
struct ISInstance {
  ConflictGraph graph;
  std::size_t t = 0;
};

// Thrown when the base instance of a reduction admits a maximal EF1
// allocation.
class BaseAdmitsEf1 : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

struct ReductionSpec {
  Instance base;
  ISInstance is;
  Value gamma;
  Value lambda;  // gamma / t
  // Gamma-attaining maximal allocation of the base, bundles ordered by
  // v^-1 descending (stable).
  Allocation base_witness;
  std::size_t base_goods = 0;  // goods 0 .. base_goods-1 are the base goods
  std::size_t vertices = 0;    // |V_H|

  std::size_t agents() const { return base.agents(); }
  std::size_t total_goods() const { return base_goods + 2 * agents() * vertices; }
  // Copy of vertex w in the valued gadget X_i / the zero-valued gadget Y_i.
  Good x_good(std::size_t agent, std::size_t w) const {
    return base_goods + agent * vertices + w;
  }
  Good y_good(std::size_t agent, std::size_t w) const {
    return base_goods + (agents() + agent) * vertices + w;
  }
};

struct Reduction {
  Instance instance;
  ReductionSpec spec;
};

// Goods: base goods, then X_1..X_n, then Y_1..Y_n. Edges: the base edges,
// H inside every X_i, the matching x_{i,w} - y_{i,w}, and every pair between
// different gadgets. v(S) = v_base(S on base goods) + lambda |S on X|.
// Throws BaseAdmitsEf1 if the oracle finds a maximal EF1 allocation of the
// base, InvalidInput for t = 0, t > |V_H| or a non-identical base.
Reduction build_reduction(const Instance& base, const ISInstance& is,
                          const EnumerationBudget& budget = {});

// Certificate for a YES instance: agent i gets the base witness bundle, the
// X-copies of the first c_i witness vertices and the Y-copies of the rest,
// with c_i = ceil(max(0, v^-1(A~_1) - v(A~_i)) / lambda). Throws InvalidInput
// if `witness` is not an independent set of H of size t.
Allocation yes_certificate(const ReductionSpec& spec, const GoodSet& witness);

struct StructuredSearch {
  std::uint64_t checked = 0;
  std::uint64_t ef1 = 0;
  std::uint64_t not_maximal = 0;  // sanity counter; expected to stay 0
};

// Every maximal base allocation combined with every choice, per agent i, of an
// independent set S_i of H taken from X_i (Y_i takes the complement). Counts
// how many of these maximal allocations of the reduced instance are EF1.
StructuredSearch structured_search(const Reduction& reduction,
                                   const EnumerationBudget& budget = {});

}  // namespace conflictfair

#endif  // CONFLICTFAIR_HARDNESS_H_
