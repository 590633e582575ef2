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

#include "conflictfair/hardness.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "conflictfair/checks.h"

namespace conflictfair {
namespace {

Instance three_agent_counterexample() {
  constexpr std::size_t m = 7;
  std::vector<Edge> edges;
  for (Good a = 0; a < 3; ++a) {
    for (Good b = 3; b < 6; ++b) edges.emplace_back(a, b);
  }
  edges.emplace_back(0, 6);
  edges.emplace_back(3, 6);

  auto mask = [](std::initializer_list<Good> goods) {
    std::uint64_t out = 0;
    for (Good g : goods) out |= std::uint64_t{1} << g;
    return out;
  };
  const std::uint64_t value_three[] = {mask({1, 6}), mask({2, 6}), mask({4, 6}), mask({5, 6})};
  std::vector<Value> entries(std::size_t{1} << m);
  for (std::uint64_t s = 1; s < entries.size(); ++s) {
    if (std::has_single_bit(s)) {
      entries[s] = (s == mask({0}) || s == mask({3})) ? 1 : 2;
    } else if (std::find(std::begin(value_three), std::end(value_three), s) !=
               std::end(value_three)) {
      entries[s] = 3;
    } else {
      entries[s] = 4;
    }
  }
  return Instance(ConflictGraph(m, std::move(edges)), 3, ValuationModel::table(m, std::move(entries)));
}

std::vector<GoodSet> independent_sets(const ConflictGraph& graph) {
  std::vector<GoodSet> out;
  const std::size_t v = graph.m();
  if (v > 24) throw InvalidInput("structured search supports |V_H| <= 24");
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << v); ++s) {
    GoodSet set = GoodSet::from_mask(v, s);
    if (is_independent_set(graph, set)) out.push_back(std::move(set));
  }
  return out;
}

}  // namespace

Instance gen_counterexample(std::size_t n) {
  if (n < 3) throw InvalidInput("counterexamples exist for n >= 3, got n = " + std::to_string(n));
  if (n == 3) return three_agent_counterexample();
  std::vector<Value> values(n + 2, Value(3));
  std::fill(values.begin(), values.begin() + 3, Value(2));
  return Instance(ConflictGraph::complete_bipartite(3, n - 1), n,
                  ValuationModel::additive(std::move(values)));
}

Reduction build_reduction(const Instance& base, const ISInstance& is,
                          const EnumerationBudget& budget) {
  if (!base.identical() || base.mode() != Mode::kGoods) {
    throw InvalidInput("reduction base must have one goods-mode valuation");
  }
  const std::size_t vertices = is.graph.m();
  if (is.t == 0 || is.t > vertices) {
    throw InvalidInput("need 1 <= t <= |V_H|, got t = " + std::to_string(is.t) +
                       ", |V_H| = " + std::to_string(vertices));
  }
  const ExistenceResult existence = exists_maximal_ef1(base, budget);
  if (existence.exists) {
    throw BaseAdmitsEf1("base instance admits the maximal EF1 allocation " +
                        existence.witness->to_string());
  }
  GammaResult gamma = gamma_with_witness(base, budget);
  if (gamma.gamma <= 0) {
    throw std::logic_error("gamma must be positive when no maximal EF1 allocation exists");
  }

  const ValuationModel& base_v = base.valuation(0);
  std::stable_sort(gamma.attaining.bundles.begin(), gamma.attaining.bundles.end(),
                   [&](const GoodSet& a, const GoodSet& b) {
                     return value_minus_one(base_v, a) > value_minus_one(base_v, b);
                   });

  ReductionSpec spec{base, is, gamma.gamma, Value(gamma.gamma / Value(is.t)), gamma.attaining,
                     base.m(), vertices};
  const std::size_t n = base.agents();
  const std::size_t m = spec.total_goods();

  std::vector<Edge> edges = base.graph().edges();
  for (std::size_t i = 0; i < n; ++i) {
    for (auto [u, w] : is.graph.edges()) edges.emplace_back(spec.x_good(i, u), spec.x_good(i, w));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t w = 0; w < vertices; ++w) edges.emplace_back(spec.x_good(i, w), spec.y_good(i, w));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t a = 0; a < vertices; ++a) {
        for (std::size_t b = 0; b < vertices; ++b) {
          for (Good u : {spec.x_good(i, a), spec.y_good(i, a)}) {
            for (Good w : {spec.x_good(j, b), spec.y_good(j, b)}) edges.emplace_back(u, w);
          }
        }
      }
    }
  }

  std::vector<Value> extra(m, Value(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t w = 0; w < vertices; ++w) extra[spec.x_good(i, w)] = spec.lambda;
  }
  ValuationModel model = [&] {
    if (const auto* additive = std::get_if<AdditiveModel>(&base_v.kind())) {
      std::copy(additive->values.begin(), additive->values.end(), extra.begin());
      return ValuationModel::additive(std::move(extra));
    }
    std::vector<Good> base_goods(base.m());
    std::iota(base_goods.begin(), base_goods.end(), Good{0});
    return ValuationModel::composite(base_v, std::move(base_goods), std::move(extra));
  }();

  Instance reduced(ConflictGraph(m, std::move(edges)), n, std::move(model));
  return Reduction{std::move(reduced), std::move(spec)};
}

Allocation yes_certificate(const ReductionSpec& spec, const GoodSet& witness) {
  if (witness.universe() != spec.vertices || witness.size() != spec.is.t ||
      !is_independent_set(spec.is.graph, witness)) {
    throw InvalidInput("witness must be an independent set of H of size t = " +
                       std::to_string(spec.is.t));
  }
  const ValuationModel& base_v = spec.base.valuation(0);
  const std::vector<Good> order = witness.to_vector();
  const Value top = value_minus_one(base_v, spec.base_witness.bundles.front());
  const std::size_t m = spec.total_goods();

  Allocation out(spec.agents(), m);
  for (std::size_t i = 0; i < spec.agents(); ++i) {
    const GoodSet& base_bundle = spec.base_witness.bundles[i];
    for (Good g : base_bundle) out.bundles[i].insert(g);
    const Value deficit = std::max(Value(0), Value(top - base_v.evaluate(base_bundle)));
    const auto c = static_cast<std::size_t>(ceil_value(deficit / spec.lambda));
    if (c > order.size()) throw std::logic_error("c_i exceeds t");
    GoodSet chosen(spec.vertices);
    for (std::size_t r = 0; r < c; ++r) chosen.insert(order[r]);
    for (std::size_t w = 0; w < spec.vertices; ++w) {
      out.bundles[i].insert(chosen.contains(w) ? spec.x_good(i, w) : spec.y_good(i, w));
    }
  }
  return out;
}

StructuredSearch structured_search(const Reduction& reduction, const EnumerationBudget& budget) {
  const ReductionSpec& spec = reduction.spec;
  const Instance& reduced = reduction.instance;
  const std::size_t n = spec.agents();
  const std::size_t m = spec.total_goods();
  const std::vector<GoodSet> choices = independent_sets(spec.is.graph);

  StructuredSearch result;
  std::vector<std::size_t> pick(n, 0);
  enumerate_maximal_allocations(spec.base, budget, [&](const Allocation& base_allocation) {
    std::fill(pick.begin(), pick.end(), 0);
    while (true) {
      Allocation a(n, m);
      for (std::size_t i = 0; i < n; ++i) {
        for (Good g : base_allocation.bundles[i]) a.bundles[i].insert(g);
        const GoodSet& chosen = choices[pick[i]];
        for (std::size_t w = 0; w < spec.vertices; ++w) {
          a.bundles[i].insert(chosen.contains(w) ? spec.x_good(i, w) : spec.y_good(i, w));
        }
      }
      ++result.checked;
      if (!is_maximal(reduced, a)) ++result.not_maximal;
      if (is_ef1(reduced, a)) ++result.ef1;

      std::size_t i = 0;
      while (i < n && ++pick[i] == choices.size()) pick[i++] = 0;
      if (i == n) break;
    }
    return true;
  });
  return result;
}

}  // namespace conflictfair
