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

// Polynomial solvers for special cases: bipartite conflict graphs, interval
// conflict graphs (two agents), and few goods (m <= n + 1, any n).

#ifndef CONFLICTFAIR_GRAPH_CLASSES_H_
#define CONFLICTFAIR_GRAPH_CLASSES_H_

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "conflictfair/chain.h"
#include "conflictfair/good_set.h"
#include "conflictfair/graph.h"
#include "conflictfair/instance.h"
#include "conflictfair/value.h"

namespace conflictfair {

// ---------------------------------------------------------------------------
// Bipartite graphs

struct Bipartition {
  GoodSet heavy;  // M_1: v(M_1) >= v(M_2), holds every isolated good
  GoodSet light;  // M_2
};

// 2-colors the graph and puts isolated goods on the heavier side. Throws
// InvalidInput if the graph is not bipartite.
Bipartition bipartition_for(const Instance& instance);

// Runs the chain with S = M_1 (ascending). The outcome is always found.
// Throws InvalidInput when `parts` is not a bipartition, M_1 is lighter than
// M_2, or an isolated good sits in M_2.
ChainOutcome bipartite_ef1(const Instance& instance,
                           const std::optional<Bipartition>& parts = std::nullopt);

// ---------------------------------------------------------------------------
// Interval graphs

// Half-open [left, right).
struct Interval {
  Value left;
  Value right;
};

// One interval per good. Equal endpoints are ordered right-before-left and
// then by good index, which gives pairwise distinct endpoints while keeping
// the half-open overlap relation unchanged.
class IntervalSet {
 public:
  IntervalSet() = default;
  // Throws InvalidInput unless left < right for every interval.
  explicit IntervalSet(std::vector<Interval> intervals);

  std::size_t size() const { return intervals_.size(); }
  const Interval& operator[](Good g) const { return intervals_.at(g); }
  const std::vector<Interval>& intervals() const { return intervals_; }

  // Ranks in the perturbed endpoint order (0 .. 2m-1).
  std::size_t left_rank(Good g) const { return left_rank_.at(g); }
  std::size_t right_rank(Good g) const { return right_rank_.at(g); }

  bool overlap(Good a, Good b) const;
  ConflictGraph overlap_graph() const;

 private:
  std::vector<Interval> intervals_;
  std::vector<std::size_t> left_rank_;
  std::vector<std::size_t> right_rank_;
};

enum class ScanDirection { kForward, kReverse };

struct SchedulingSolution {
  std::vector<Good> chosen;  // by increasing right endpoint
  std::size_t capacity = 1;
};

// Maximum number of chosen intervals covering a single point.
std::size_t max_point_coverage(const IntervalSet& intervals, const GoodSet& goods);

// Greedy maximum-size subset of `subset` with point coverage <= capacity.
// Forward scans by increasing right endpoint; reverse is the mirror image and
// scans by decreasing left endpoint.
SchedulingSolution interval_scheduling_greedy(const IntervalSet& intervals, const GoodSet& subset,
                                              std::size_t capacity, ScanDirection direction);

struct IntervalOutcome {
  Allocation allocation;
  std::size_t step = 0;             // index into `chain`
  std::vector<Allocation> chain;    // prefix chain, core chain, suffix chain
  std::size_t prefix_length = 0;    // steps contributed by the prefix chain
  std::size_t core_length = 0;      // steps contributed by the core chain
  GoodSet heavy;                    // Z_1 after augmentation
  GoodSet light;                    // Z_2 after augmentation
  GoodSet forward_side;             // X'_1
  GoodSet reverse_side;             // X'_2
};

// Two agents, identical goods-mode valuation, interval conflict graph. Throws
// InvalidInput if the intervals do not induce the instance graph.
IntervalOutcome interval_ef1(const Instance& instance, const IntervalSet& intervals);

// ---------------------------------------------------------------------------
// Few goods

// One round-robin pass (agent order 0..n-1, best single good, ties to the
// lowest index), then the leftover good, if any, to the lowest-index agent
// that can take it. Requires m <= n + 1; chores instances are negated first.
Allocation round_robin_small(const Instance& instance);

}  // namespace conflictfair

#endif  // CONFLICTFAIR_GRAPH_CLASSES_H_
