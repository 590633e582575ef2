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

// Brute-force ground truth for small instances: every assignment of each good
// to an agent or to nobody is visited in mixed-radix order (good 0 is the most
// significant digit, label 0 = unassigned, label a = agent a-1).

#ifndef CONFLICTFAIR_ORACLE_H_
#define CONFLICTFAIR_ORACLE_H_

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "conflictfair/instance.h"
#include "conflictfair/value.h"

namespace conflictfair {

struct EnumerationBudget {
  std::uint64_t max_assignments = 100'000'000;
  // Zero means no wall-clock limit.
  std::chrono::milliseconds time_limit{0};
  // Workers split the space by the label of good 0; output order does not
  // depend on this.
  unsigned workers = 1;
};

// Enumeration refused or aborted; never accompanied by a partial answer.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// (n+1)^m, saturating at UINT64_MAX.
std::uint64_t assignment_count(const Instance& instance);

// Streams every valid maximal allocation in mixed-radix order. `visit`
// returns false to stop early. Single-threaded.
void enumerate_maximal_allocations(const Instance& instance, const EnumerationBudget& budget,
                                   const std::function<bool(const Allocation&)>& visit);

// All valid maximal allocations in mixed-radix order.
std::vector<Allocation> maximal_allocations(const Instance& instance,
                                            const EnumerationBudget& budget = {});

struct ExistenceResult {
  bool exists = false;
  std::optional<Allocation> witness;  // first EF1 maximal allocation in order
};

ExistenceResult exists_maximal_ef1(const Instance& instance, const EnumerationBudget& budget = {});

struct GammaResult {
  Value gamma;
  Allocation attaining;  // first maximal allocation attaining gamma
};

// gamma = min over maximal allocations of max over agent pairs (i, i'),
// i = i' included, of v^-1(A_i) - v(A_i'). Requires identical valuations.
GammaResult gamma_with_witness(const Instance& instance, const EnumerationBudget& budget = {});
Value compute_gamma(const Instance& instance, const EnumerationBudget& budget = {});

}  // namespace conflictfair

#endif  // CONFLICTFAIR_ORACLE_H_
