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

#ifndef CONFLICTFAIR_SWAP_H_
#define CONFLICTFAIR_SWAP_H_

#include <cstddef>
#include <vector>

#include "conflictfair/good_set.h"
#include "conflictfair/instance.h"
#include "conflictfair/value.h"

namespace conflictfair {

struct SwapIteration {
  GoodSet source;      // S^i
  Value source_value;  // v(S^i)
  bool terminal = false;
  // Non-terminal only: the heavier side set X^i_l (l = 1 or 2) seeding S^{i+1}.
  int chosen_side = 0;
  GoodSet chosen;
  Value chosen_value;
};

struct SwapTrace {
  std::vector<SwapIteration> iterations;
};

struct SwapResult {
  Allocation allocation;
  std::size_t step = 0;  // chain step of the returned allocation
  SwapTrace trace;
};

// Escalating maximal-independent-set search: start from a maximal IS through
// the most valuable single good, run the chain, and on failure restart from a
// maximal IS containing the heavier side set. v(S^i) strictly increases, so the
// loop terminates with a maximal EF1 allocation. Requires n = 2, identical
// valuation, goods mode.
SwapResult swap_ef1(const Instance& instance);

// ceil(log_{m/(m-1)} m) + 1, computed exactly. Requires m >= 2.
std::size_t iteration_bound_additive(std::size_t m);

}  // namespace conflictfair

#endif  // CONFLICTFAIR_SWAP_H_
