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

#ifndef CONFLICTFAIR_INSTANCE_H_
#define CONFLICTFAIR_INSTANCE_H_

#include <cstddef>
#include <string>
#include <vector>

#include "conflictfair/good_set.h"
#include "conflictfair/graph.h"
#include "conflictfair/valuation.h"

namespace conflictfair {

enum class Mode { kGoods, kChores };

std::string to_string(Mode mode);

// Conflict graph, n agents and their valuations. In goods mode every model is
// monotone non-decreasing, in chores mode non-increasing; both have v(empty)=0.
class Instance {
 public:
  Instance(ConflictGraph graph, std::size_t agents, ValuationModel identical,
           Mode mode = Mode::kGoods);
  Instance(ConflictGraph graph, std::vector<ValuationModel> per_agent, Mode mode = Mode::kGoods);

  const ConflictGraph& graph() const { return graph_; }
  std::size_t m() const { return graph_.m(); }
  std::size_t agents() const { return agents_; }
  Mode mode() const { return mode_; }
  bool identical() const { return identical_; }
  // Agent indices are 0-based.
  const ValuationModel& valuation(std::size_t agent) const;
  const std::vector<ValuationModel>& valuations() const { return models_; }

  // Goods-mode instance with every model negated; identity in goods mode.
  Instance to_goods() const;
  // Same graph and mode, every agent valued by `model`.
  Instance with_identical(const ValuationModel& model) const;

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.agents_ == b.agents_ && a.identical_ == b.identical_ && a.mode_ == b.mode_ &&
           a.graph_ == b.graph_ && a.models_ == b.models_;
  }

 private:
  void validate() const;

  ConflictGraph graph_;
  std::size_t agents_ = 0;
  bool identical_ = false;
  Mode mode_ = Mode::kGoods;
  // One entry when identical, otherwise one per agent.
  std::vector<ValuationModel> models_;
};

// Ordered list of n bundles. Validity is checked by validate_allocation, not
// on construction.
struct Allocation {
  std::vector<GoodSet> bundles;

  Allocation() = default;
  explicit Allocation(std::vector<GoodSet> b) : bundles(std::move(b)) {}
  // n empty bundles over m goods.
  Allocation(std::size_t agents, std::size_t m) : bundles(agents, GoodSet(m)) {}
  // Throws InvalidInput for goods outside [0, m).
  static Allocation from_lists(std::size_t m, const std::vector<std::vector<Good>>& lists);

  std::size_t agents() const { return bundles.size(); }
  GoodSet allocated() const;
  std::vector<std::vector<Good>> to_lists() const;
  std::string to_string() const;

  friend bool operator==(const Allocation& a, const Allocation& b) {
    return a.bundles == b.bundles;
  }
};

}  // namespace conflictfair

#endif  // CONFLICTFAIR_INSTANCE_H_
