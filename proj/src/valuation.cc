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

#include "conflictfair/valuation.h"

#include <string>

namespace conflictfair {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

Monotonicity additive_monotonicity(const std::vector<Value>& values) {
  Monotonicity out{true, true};
  for (const Value& x : values) {
    if (x < 0) out.non_decreasing = false;
    if (x > 0) out.non_increasing = false;
  }
  return out;
}

}  // namespace

ValuationModel ValuationModel::additive(std::vector<Value> values) {
  const std::size_t m = values.size();
  return ValuationModel(m, AdditiveModel{std::move(values)});
}

ValuationModel ValuationModel::uniform(std::size_t m) { return ValuationModel(m, UniformModel{m}); }

ValuationModel ValuationModel::table(std::size_t m, std::vector<Value> entries) {
  if (m > kMaxTableGoods) {
    throw InvalidInput("table valuations support at most " + std::to_string(kMaxTableGoods) +
                       " goods, got " + std::to_string(m));
  }
  if (entries.size() != (std::size_t{1} << m)) {
    throw InvalidInput("table over " + std::to_string(m) + " goods needs " +
                       std::to_string(std::size_t{1} << m) + " entries, got " +
                       std::to_string(entries.size()));
  }
  if (entries[0] != 0) throw InvalidInput("table must assign value 0 to the empty set");
  return ValuationModel(m, TableModel{m, std::move(entries)});
}

ValuationModel ValuationModel::table(
    std::size_t m, const std::vector<std::pair<std::uint64_t, Value>>& entries) {
  if (m > kMaxTableGoods) {
    throw InvalidInput("table valuations support at most " + std::to_string(kMaxTableGoods) +
                       " goods, got " + std::to_string(m));
  }
  const std::size_t count = std::size_t{1} << m;
  std::vector<Value> dense(count);
  std::vector<bool> seen(count, false);
  for (const auto& [mask, value] : entries) {
    if (mask >= count) {
      throw InvalidInput("table key " + std::to_string(mask) + " names goods outside [0, " +
                         std::to_string(m) + ")");
    }
    if (seen[mask]) throw InvalidInput("table key " + std::to_string(mask) + " repeated");
    seen[mask] = true;
    dense[mask] = value;
  }
  for (std::size_t mask = 0; mask < count; ++mask) {
    if (!seen[mask]) throw InvalidInput("table is missing subset " + std::to_string(mask));
  }
  return table(m, std::move(dense));
}

ValuationModel ValuationModel::negated(ValuationModel inner) {
  const std::size_t m = inner.m();
  return ValuationModel(m, NegatedModel{std::make_shared<const ValuationModel>(std::move(inner))});
}

ValuationModel ValuationModel::composite(ValuationModel base, std::vector<Good> base_goods,
                                         std::vector<Value> extra) {
  const std::size_t m = extra.size();
  if (base_goods.size() != base.m()) {
    throw InvalidInput("composite model maps " + std::to_string(base_goods.size()) +
                       " goods onto a base over " + std::to_string(base.m()));
  }
  GoodSet used(m);
  for (Good g : base_goods) {
    if (g >= m || used.contains(g)) {
      throw InvalidInput("composite base map must be injective into [0, " + std::to_string(m) +
                         ")");
    }
    used.insert(g);
  }
  return ValuationModel(m, CompositeModel{std::make_shared<const ValuationModel>(std::move(base)),
                                          std::move(base_goods), std::move(extra)});
}

Value ValuationModel::evaluate(const GoodSet& subset) const {
  if (subset.universe() != m_) {
    throw InvalidInput("subset over " + std::to_string(subset.universe()) +
                       " goods evaluated by a model over " + std::to_string(m_));
  }
  return std::visit(
      Overloaded{
          [&](const AdditiveModel& a) {
            Value sum = 0;
            for (Good g : subset) sum += a.values[g];
            return sum;
          },
          [&](const UniformModel&) { return Value(subset.size()); },
          [&](const TableModel& t) { return t.entries[subset.to_mask()]; },
          [&](const NegatedModel& n) { return Value(-n.inner->evaluate(subset)); },
          [&](const CompositeModel& c) {
            GoodSet restricted(c.base->m());
            for (Good j = 0; j < c.base_goods.size(); ++j) {
              if (subset.contains(c.base_goods[j])) restricted.insert(j);
            }
            Value sum = c.base->evaluate(restricted);
            for (Good g : subset) sum += c.extra[g];
            return sum;
          },
      },
      kind_);
}

Value ValuationModel::evaluate_single(Good g) const {
  GoodSet s(m_);
  s.insert(g);
  return evaluate(s);
}

Monotonicity ValuationModel::monotonicity() const {
  return std::visit(
      Overloaded{
          [&](const AdditiveModel& a) { return additive_monotonicity(a.values); },
          [&](const UniformModel& u) { return Monotonicity{true, u.m == 0}; },
          [&](const TableModel& t) {
            Monotonicity out{true, true};
            const std::size_t count = t.entries.size();
            for (std::size_t mask = 0; mask < count; ++mask) {
              for (std::size_t g = 0; g < t.m; ++g) {
                if ((mask >> g) & 1U) continue;
                const Value& lo = t.entries[mask];
                const Value& hi = t.entries[mask | (std::size_t{1} << g)];
                if (lo > hi) out.non_decreasing = false;
                if (lo < hi) out.non_increasing = false;
              }
              if (!out.non_decreasing && !out.non_increasing) return out;
            }
            return out;
          },
          [&](const NegatedModel& n) {
            const Monotonicity inner = n.inner->monotonicity();
            return Monotonicity{inner.non_increasing, inner.non_decreasing};
          },
          [&](const CompositeModel& c) {
            const Monotonicity base = c.base->monotonicity();
            const Monotonicity extra = additive_monotonicity(c.extra);
            return Monotonicity{base.non_decreasing && extra.non_decreasing,
                                base.non_increasing && extra.non_increasing};
          },
      },
      kind_);
}

bool operator==(const ValuationModel& a, const ValuationModel& b) {
  if (a.m_ != b.m_ || a.kind_.index() != b.kind_.index()) return false;
  return std::visit(
      Overloaded{
          [&](const AdditiveModel& x) {
            return x.values == std::get<AdditiveModel>(b.kind_).values;
          },
          [&](const UniformModel&) { return true; },
          [&](const TableModel& x) {
            return x.entries == std::get<TableModel>(b.kind_).entries;
          },
          [&](const NegatedModel& x) {
            return *x.inner == *std::get<NegatedModel>(b.kind_).inner;
          },
          [&](const CompositeModel& x) {
            const auto& y = std::get<CompositeModel>(b.kind_);
            return *x.base == *y.base && x.base_goods == y.base_goods && x.extra == y.extra;
          },
      },
      a.kind_);
}

}  // namespace conflictfair
