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

#include "conflictfair/checks.h"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace conflictfair {
namespace {

void require_bundles(const Instance& instance, const Allocation& allocation) {
  if (allocation.agents() != instance.agents()) {
    throw InvalidInput("allocation has " + std::to_string(allocation.agents()) +
                       " bundles for " + std::to_string(instance.agents()) + " agents");
  }
  for (const auto& bundle : allocation.bundles) {
    if (bundle.universe() != instance.m()) {
      throw InvalidInput("bundle over " + std::to_string(bundle.universe()) +
                         " goods in an instance with " + std::to_string(instance.m()));
    }
  }
}

// Does agent i (valuation v) accept A_j in goods mode?
bool goods_envy_free_up_to_one(const ValuationModel& v, const GoodSet& own,
                               const GoodSet& other) {
  if (other.empty()) return true;
  return v.evaluate(own) >= value_minus_one(v, other);
}

// max over c in own of v(own \ {c}); own must be non-empty.
Value best_after_dropping_one(const ValuationModel& v, const GoodSet& own) {
  GoodSet rest = own;
  bool first = true;
  Value best;
  for (Good c : own) {
    rest.erase(c);
    Value candidate = v.evaluate(rest);
    rest.insert(c);
    if (first || candidate > best) best = std::move(candidate);
    first = false;
  }
  return best;
}

// Chores: agent i holding `own` against `other`.
bool chores_envy_free_up_to_one(const ValuationModel& v, const GoodSet& own,
                                const GoodSet& other) {
  if (own.empty()) return true;
  return best_after_dropping_one(v, own) >= v.evaluate(other);
}

Value minus_one_by_removal(const ValuationModel& model, const GoodSet& subset) {
  GoodSet rest = subset;
  bool first = true;
  Value best;
  for (Good g : subset) {
    rest.erase(g);
    Value candidate = model.evaluate(rest);
    rest.insert(g);
    if (first || candidate < best) best = std::move(candidate);
    first = false;
  }
  return best;
}

Value composite_minus_one(const CompositeModel& c, const GoodSet& subset) {
  GoodSet restricted(c.base->m());
  GoodSet base_part(subset.universe());
  for (Good j = 0; j < c.base_goods.size(); ++j) {
    if (subset.contains(c.base_goods[j])) {
      restricted.insert(j);
      base_part.insert(c.base_goods[j]);
    }
  }
  Value extra_sum = 0;
  for (Good g : subset) extra_sum += c.extra[g];
  const Value base_value = c.base->evaluate(restricted);

  std::optional<Value> best;
  const GoodSet others = subset - base_part;
  for (Good g : others) {
    Value candidate = base_value + extra_sum - c.extra[g];
    if (!best || candidate < *best) best = std::move(candidate);
  }
  for (Good j : restricted) {
    restricted.erase(j);
    Value candidate = c.base->evaluate(restricted) + extra_sum - c.extra[c.base_goods[j]];
    restricted.insert(j);
    if (!best || candidate < *best) best = std::move(candidate);
  }
  return *best;
}

}  // namespace

Value evaluate(const ValuationModel& model, const GoodSet& subset) {
  return model.evaluate(subset);
}

Value value_minus_one(const ValuationModel& model, const GoodSet& subset) {
  if (subset.universe() != model.m()) {
    throw InvalidInput("subset over " + std::to_string(subset.universe()) +
                       " goods evaluated by a model over " + std::to_string(model.m()));
  }
  if (subset.empty()) return Value(0);
  if (const auto* a = std::get_if<AdditiveModel>(&model.kind())) {
    Value sum = 0;
    const Value* top = nullptr;
    for (Good g : subset) {
      sum += a->values[g];
      if (!top || a->values[g] > *top) top = &a->values[g];
    }
    return sum - *top;
  }
  if (std::holds_alternative<UniformModel>(model.kind())) return Value(subset.size() - 1);
  if (const auto* c = std::get_if<CompositeModel>(&model.kind())) return composite_minus_one(*c, subset);
  return minus_one_by_removal(model, subset);
}

bool is_independent_set(const ConflictGraph& graph, const GoodSet& subset) {
  for (Good g : subset) {
    if (graph.neighbors(g).intersects(subset)) return false;
  }
  return true;
}

AllocationReport validate_allocation(const Instance& instance, const Allocation& allocation) {
  require_bundles(instance, allocation);
  AllocationReport report;
  report.disjoint = true;
  GoodSet seen(instance.m());
  for (const auto& bundle : allocation.bundles) {
    if (seen.intersects(bundle)) report.disjoint = false;
    seen |= bundle;
    report.independent.push_back(is_independent_set(instance.graph(), bundle));
  }
  report.wellformed = report.disjoint;
  for (bool ok : report.independent) report.wellformed = report.wellformed && ok;
  return report;
}

bool is_maximal(const Instance& instance, const Allocation& allocation) {
  require_bundles(instance, allocation);
  const GoodSet unallocated = allocation.allocated().complement();
  for (Good g : unallocated) {
    const GoodSet& around = instance.graph().neighbors(g);
    for (const auto& bundle : allocation.bundles) {
      if (!around.intersects(bundle)) return false;
    }
  }
  return true;
}

bool is_ef1(const Instance& instance, const Allocation& allocation) {
  require_bundles(instance, allocation);
  const std::size_t n = instance.agents();
  const auto& bundles = allocation.bundles;
  if (instance.identical()) {
    // One evaluation per bundle instead of one per ordered pair.
    const ValuationModel& v = instance.valuation(0);
    std::vector<Value> own(n);
    std::vector<Value> against(n);
    std::vector<bool> empty(n);
    for (std::size_t i = 0; i < n; ++i) {
      empty[i] = bundles[i].empty();
      if (instance.mode() == Mode::kGoods) {
        if (const auto* a = std::get_if<AdditiveModel>(&v.kind()); a && !empty[i]) {
          const Value* top = nullptr;
          for (Good g : bundles[i]) {
            own[i] += a->values[g];
            if (!top || a->values[g] > *top) top = &a->values[g];
          }
          against[i] = own[i] - *top;
          continue;
        }
        own[i] = v.evaluate(bundles[i]);
        if (!empty[i]) against[i] = value_minus_one(v, bundles[i]);
      } else {
        if (!empty[i]) own[i] = best_after_dropping_one(v, bundles[i]);
        against[i] = v.evaluate(bundles[i]);
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        if (instance.mode() == Mode::kGoods) {
          if (!empty[j] && own[i] < against[j]) return false;
        } else {
          if (!empty[i] && own[i] < against[j]) return false;
        }
      }
    }
    return true;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const ValuationModel& v = instance.valuation(i);
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const bool ok = instance.mode() == Mode::kGoods
                          ? goods_envy_free_up_to_one(v, bundles[i], bundles[j])
                          : chores_envy_free_up_to_one(v, bundles[i], bundles[j]);
      if (!ok) return false;
    }
  }
  return true;
}

bool is_ef1_pair(const ValuationModel& model, const GoodSet& first, const GoodSet& second) {
  return goods_envy_free_up_to_one(model, first, second) &&
         goods_envy_free_up_to_one(model, second, first);
}

bool is_ordered_adjacent(const Allocation& before, const Allocation& after) {
  if (before.agents() != 2 || after.agents() != 2) {
    throw InvalidInput("ordered adjacency is defined for two-bundle allocations");
  }
  return (before.bundles[0] - after.bundles[0]).size() <= 1 &&
         (after.bundles[1] - before.bundles[1]).size() <= 1;
}

GoodSet complete_to_maximal_is(const ConflictGraph& graph, const GoodSet& seed) {
  if (seed.universe() != graph.m()) throw InvalidInput("seed is over the wrong universe");
  if (!is_independent_set(graph, seed)) {
    throw InvalidInput("seed " + seed.to_string() + " is not an independent set");
  }
  GoodSet out = seed;
  for (Good g = 0; g < graph.m(); ++g) {
    if (!out.contains(g) && !graph.neighbors(g).intersects(out)) out.insert(g);
  }
  return out;
}

bool is_maximal_independent_set(const ConflictGraph& graph, const GoodSet& set) {
  if (!is_independent_set(graph, set)) return false;
  for (Good g = 0; g < graph.m(); ++g) {
    if (!set.contains(g) && !graph.neighbors(g).intersects(set)) return false;
  }
  return true;
}

}  // namespace conflictfair
