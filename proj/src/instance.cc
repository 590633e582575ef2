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

#include "conflictfair/instance.h"

namespace conflictfair {

std::string to_string(Mode mode) { return mode == Mode::kGoods ? "goods" : "chores"; }

Instance::Instance(ConflictGraph graph, std::size_t agents, ValuationModel identical, Mode mode)
    : graph_(std::move(graph)), agents_(agents), identical_(true), mode_(mode) {
  models_.push_back(std::move(identical));
  validate();
}

Instance::Instance(ConflictGraph graph, std::vector<ValuationModel> per_agent, Mode mode)
    : graph_(std::move(graph)),
      agents_(per_agent.size()),
      identical_(false),
      mode_(mode),
      models_(std::move(per_agent)) {
  validate();
}

void Instance::validate() const {
  if (agents_ == 0) throw InvalidInput("an instance needs at least one agent");
  for (std::size_t i = 0; i < models_.size(); ++i) {
    const ValuationModel& model = models_[i];
    if (model.m() != graph_.m()) {
      throw InvalidInput("valuation " + std::to_string(i) + " is over " +
                         std::to_string(model.m()) + " goods, graph has " +
                         std::to_string(graph_.m()));
    }
    const Monotonicity mono = model.monotonicity();
    if (mode_ == Mode::kGoods && !mono.non_decreasing) {
      throw InvalidInput("valuation " + std::to_string(i) +
                         " is not monotone non-decreasing (goods mode)");
    }
    if (mode_ == Mode::kChores && !mono.non_increasing) {
      throw InvalidInput("valuation " + std::to_string(i) +
                         " is not monotone non-increasing (chores mode)");
    }
  }
}

const ValuationModel& Instance::valuation(std::size_t agent) const {
  if (agent >= agents_) {
    throw InvalidInput("agent " + std::to_string(agent) + " outside [0, " +
                       std::to_string(agents_) + ")");
  }
  return identical_ ? models_.front() : models_[agent];
}

Instance Instance::to_goods() const {
  if (mode_ == Mode::kGoods) return *this;
  if (identical_) {
    return Instance(graph_, agents_, ValuationModel::negated(models_.front()), Mode::kGoods);
  }
  std::vector<ValuationModel> negated;
  negated.reserve(models_.size());
  for (const auto& model : models_) negated.push_back(ValuationModel::negated(model));
  return Instance(graph_, std::move(negated), Mode::kGoods);
}

Instance Instance::with_identical(const ValuationModel& model) const {
  return Instance(graph_, agents_, model, mode_);
}

Allocation Allocation::from_lists(std::size_t m, const std::vector<std::vector<Good>>& lists) {
  Allocation out;
  out.bundles.reserve(lists.size());
  for (const auto& list : lists) out.bundles.emplace_back(m, std::span<const Good>(list));
  return out;
}

GoodSet Allocation::allocated() const {
  GoodSet all(bundles.empty() ? 0 : bundles.front().universe());
  for (const auto& bundle : bundles) all |= bundle;
  return all;
}

std::vector<std::vector<Good>> Allocation::to_lists() const {
  std::vector<std::vector<Good>> out;
  out.reserve(bundles.size());
  for (const auto& bundle : bundles) out.push_back(bundle.to_vector());
  return out;
}

std::string Allocation::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < bundles.size(); ++i) {
    if (i > 0) out += ", ";
    out += bundles[i].to_string();
  }
  return out + ")";
}

}  // namespace conflictfair
