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

#define BOOST_TEST_MODULE hardness
#include <boost/test/unit_test.hpp>

#include <algorithm>

#include "conflictfair/checks.h"
#include "conflictfair/hardness.h"
#include "conflictfair/oracle.h"
#include "testing.h"

namespace cf = conflictfair;
namespace ct = conflictfair::testing;
using cf::Allocation;
using cf::ConflictGraph;
using cf::GoodSet;
using cf::Instance;
using cf::Value;
using cf::ValuationModel;

namespace {

// K_4 on {0,1,2,3} plus the pendant edge 3-4: 7 edges, largest IS has 2.
ConflictGraph k4_with_pendant() {
  return ConflictGraph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}});
}

// K_{2,3} plus the edge inside the pair: 7 edges, {2,3,4} is independent.
ConflictGraph k23_with_chord() {
  return ConflictGraph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
}

std::vector<GoodSet> independent_sets_of_size(const ConflictGraph& h, std::size_t t) {
  std::vector<GoodSet> out;
  for (ct::Mask s = 0; s < (ct::Mask{1} << h.m()); ++s) {
    if (static_cast<std::size_t>(__builtin_popcountll(s)) != t) continue;
    const GoodSet set = GoodSet::from_mask(h.m(), s);
    if (cf::is_independent_set(h, set)) out.push_back(set);
  }
  return out;
}

// Greedy assignment in random order; leftover goods conflict with every
// agent, so the result is maximal.
Allocation random_maximal(const Instance& instance, ct::Rng& rng) {
  const std::size_t m = instance.m();
  std::vector<cf::Good> goods(m);
  for (cf::Good g = 0; g < m; ++g) goods[g] = g;
  std::shuffle(goods.begin(), goods.end(), rng);
  Allocation a(instance.agents(), m);
  std::vector<std::size_t> agents(instance.agents());
  for (std::size_t i = 0; i < agents.size(); ++i) agents[i] = i;
  for (cf::Good g : goods) {
    std::shuffle(agents.begin(), agents.end(), rng);
    for (std::size_t i : agents) {
      if (!instance.graph().neighbors(g).intersects(a.bundles[i])) {
        a.bundles[i].insert(g);
        break;
      }
    }
  }
  return a;
}

}  // namespace

BOOST_AUTO_TEST_SUITE(counterexamples)

BOOST_AUTO_TEST_CASE(three_agents) {
  const Instance c = cf::gen_counterexample(3);
  BOOST_TEST(c.agents() == 3u);
  BOOST_TEST(c.m() == 7u);
  BOOST_TEST(c.graph().edges().size() == 11u);
  BOOST_TEST(c.identical());
  const ValuationModel& v = c.valuation(0);
  BOOST_TEST(v.evaluate(GoodSet(7, {4, 6})) == Value(3));
  BOOST_TEST(v.evaluate(GoodSet(7, {0})) == Value(1));
  BOOST_TEST(v.evaluate(GoodSet(7, {3})) == Value(1));
  BOOST_TEST(v.evaluate(GoodSet(7, {1})) == Value(2));
  BOOST_TEST(v.evaluate(GoodSet(7, {0, 6})) == Value(4));
  BOOST_TEST(v.evaluate(GoodSet(7)) == Value(0));
  BOOST_TEST(v.monotonicity().non_decreasing);
}

BOOST_AUTO_TEST_CASE(larger_families) {
  const Instance four = cf::gen_counterexample(4);
  BOOST_TEST(four.m() == 6u);
  BOOST_TEST(four.graph() == ConflictGraph::complete_bipartite(3, 3));
  BOOST_TEST(four.valuation(0) == ValuationModel::additive({2, 2, 2, 3, 3, 3}));
  const Instance five = cf::gen_counterexample(5);
  BOOST_TEST(five.m() == 7u);
  BOOST_TEST(five.graph() == ConflictGraph::complete_bipartite(3, 4));
  BOOST_CHECK_THROW(cf::gen_counterexample(2), cf::InvalidInput);
}

BOOST_AUTO_TEST_CASE(no_maximal_ef1_allocation) {
  BOOST_TEST(!cf::exists_maximal_ef1(cf::gen_counterexample(3)).exists);
  BOOST_TEST(!cf::exists_maximal_ef1(cf::gen_counterexample(4)).exists);
}

BOOST_AUTO_TEST_SUITE_END()

BOOST_AUTO_TEST_SUITE(reduction)

BOOST_AUTO_TEST_CASE(four_agent_base_shape) {
  const cf::Reduction r =
      cf::build_reduction(cf::gen_counterexample(4), cf::ISInstance{k23_with_chord(), 3});
  BOOST_TEST(r.spec.gamma == Value(1));
  BOOST_TEST(r.spec.lambda == Value(1) / 3);
  BOOST_TEST(r.spec.lambda * 3 == r.spec.gamma);
  BOOST_TEST(r.instance.m() == 46u);
  BOOST_TEST(r.spec.total_goods() == 46u);
  BOOST_TEST(r.instance.graph().edges().size() == 657u);
  BOOST_TEST(r.instance.agents() == 4u);
  BOOST_TEST(r.instance.identical());
}

BOOST_AUTO_TEST_CASE(edge_types) {
  const cf::Reduction r =
      cf::build_reduction(cf::gen_counterexample(3), cf::ISInstance{ConflictGraph::cycle(3), 2});
  const cf::ReductionSpec& s = r.spec;
  const ConflictGraph& g = r.instance.graph();
  BOOST_TEST(r.instance.m() == 25u);
  BOOST_TEST(s.lambda == Value(1) / 2);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t w = 0; w < 3; ++w) {
      BOOST_TEST(g.adjacent(s.x_good(i, w), s.y_good(i, w)));
      BOOST_TEST(g.adjacent(s.x_good(i, w), s.x_good(i, (w + 1) % 3)));
      BOOST_TEST(!g.adjacent(s.y_good(i, w), s.y_good(i, (w + 1) % 3)));
      for (std::size_t j = 0; j < 3; ++j) {
        if (j == i) continue;
        BOOST_TEST(g.adjacent(s.x_good(i, w), s.y_good(j, w)));
        BOOST_TEST(g.adjacent(s.y_good(i, w), s.y_good(j, (w + 2) % 3)));
      }
      for (cf::Good b = 0; b < s.base_goods; ++b) {
        BOOST_TEST(!g.adjacent(b, s.x_good(i, w)));
        BOOST_TEST(!g.adjacent(b, s.y_good(i, w)));
      }
    }
  }
  // 11 + 3*3 + 3*3 + 3*36
  BOOST_TEST(g.edges().size() == 137u);
}

BOOST_AUTO_TEST_CASE(reduced_valuation_adds_lambda_per_x_good) {
  const Instance base = cf::gen_counterexample(3);
  const cf::Reduction r = cf::build_reduction(base, cf::ISInstance{ConflictGraph::cycle(3), 2});
  const cf::ReductionSpec& s = r.spec;
  ct::Rng rng(71);
  for (int trial = 0; trial < 500; ++trial) {
    GoodSet subset(25);
    GoodSet base_part(7);
    std::size_t x_count = 0;
    for (cf::Good g = 0; g < 25; ++g) {
      if (rng() % 2 == 0) continue;
      subset.insert(g);
      if (g < 7) {
        base_part.insert(g);
      } else if (g < s.y_good(0, 0)) {
        ++x_count;
      }
    }
    BOOST_REQUIRE(r.instance.valuation(0).evaluate(subset) ==
                  base.valuation(0).evaluate(base_part) + s.lambda * static_cast<long>(x_count));
  }
}

BOOST_AUTO_TEST_CASE(additive_base_stays_additive) {
  const cf::Reduction r =
      cf::build_reduction(cf::gen_counterexample(4), cf::ISInstance{ConflictGraph::empty(2), 1});
  BOOST_TEST(r.instance.valuation(0).is_additive());
}

BOOST_AUTO_TEST_CASE(base_witness_sorted_by_value_minus_one) {
  const cf::Reduction r =
      cf::build_reduction(cf::gen_counterexample(3), cf::ISInstance{ConflictGraph::cycle(3), 2});
  const ValuationModel& v = r.spec.base.valuation(0);
  const auto& bundles = r.spec.base_witness.bundles;
  BOOST_TEST(cf::is_maximal(r.spec.base, r.spec.base_witness));
  for (std::size_t i = 0; i + 1 < bundles.size(); ++i) {
    BOOST_TEST(cf::value_minus_one(v, bundles[i]) >= cf::value_minus_one(v, bundles[i + 1]));
  }
  BOOST_TEST(cf::compute_gamma(r.spec.base) == r.spec.gamma);
}

BOOST_AUTO_TEST_CASE(yes_certificate_on_isolated_vertices) {
  const cf::Reduction r =
      cf::build_reduction(cf::gen_counterexample(3), cf::ISInstance{ConflictGraph::empty(3), 2});
  for (const GoodSet& witness : independent_sets_of_size(ConflictGraph::empty(3), 2)) {
    const Allocation a = cf::yes_certificate(r.spec, witness);
    BOOST_TEST(cf::validate_allocation(r.instance, a).wellformed);
    BOOST_TEST(cf::is_maximal(r.instance, a));
    BOOST_TEST(cf::is_ef1(r.instance, a));
  }
}

BOOST_AUTO_TEST_CASE(yes_certificate_on_random_small_graphs) {
  ct::Rng rng(72);
  std::size_t verified = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t vertices = 1 + trial % 5;
    const ConflictGraph h = ct::random_graph(vertices, 0.4, rng);
    const std::size_t t = 1 + rng() % vertices;
    const auto witnesses = independent_sets_of_size(h, t);
    if (witnesses.empty()) continue;
    const cf::Reduction r = cf::build_reduction(cf::gen_counterexample(3 + trial % 2),
                                                cf::ISInstance{h, t});
    for (const GoodSet& witness : witnesses) {
      const Allocation a = cf::yes_certificate(r.spec, witness);
      BOOST_REQUIRE(cf::validate_allocation(r.instance, a).wellformed);
      BOOST_REQUIRE(cf::is_maximal(r.instance, a));
      BOOST_REQUIRE(cf::is_ef1(r.instance, a));
      ++verified;
    }
  }
  BOOST_TEST(verified > 40u);
}

BOOST_AUTO_TEST_CASE(structured_no_case_has_no_ef1) {
  const cf::Reduction r =
      cf::build_reduction(cf::gen_counterexample(3), cf::ISInstance{ConflictGraph::cycle(3), 2});
  const cf::StructuredSearch search = cf::structured_search(r);
  BOOST_TEST(search.checked > 0u);
  BOOST_TEST(search.ef1 == 0u);
  BOOST_TEST(search.not_maximal == 0u);
}

BOOST_AUTO_TEST_CASE(structured_yes_case_finds_ef1) {
  const cf::Reduction r =
      cf::build_reduction(cf::gen_counterexample(3), cf::ISInstance{ConflictGraph::empty(3), 2});
  const cf::StructuredSearch search = cf::structured_search(r);
  BOOST_TEST(search.ef1 > 0u);
  BOOST_TEST(search.not_maximal == 0u);
}

BOOST_AUTO_TEST_CASE(restriction_to_base_goods_is_maximal) {
  const cf::Reduction r =
      cf::build_reduction(cf::gen_counterexample(4), cf::ISInstance{k4_with_pendant(), 3});
  ct::Rng rng(73);
  for (int trial = 0; trial < 300; ++trial) {
    const Allocation a = random_maximal(r.instance, rng);
    BOOST_REQUIRE(cf::is_maximal(r.instance, a));
    Allocation restricted(r.spec.agents(), r.spec.base_goods);
    for (std::size_t i = 0; i < a.agents(); ++i) {
      for (cf::Good g : a.bundles[i]) {
        if (g < r.spec.base_goods) restricted.bundles[i].insert(g);
      }
    }
    BOOST_REQUIRE(cf::is_maximal(r.spec.base, restricted));
  }
}

BOOST_AUTO_TEST_CASE(rejects_bad_inputs) {
  const Instance base = cf::gen_counterexample(3);
  BOOST_CHECK_THROW(cf::build_reduction(base, cf::ISInstance{ConflictGraph::cycle(3), 4}),
                    cf::InvalidInput);
  BOOST_CHECK_THROW(cf::build_reduction(base, cf::ISInstance{ConflictGraph::cycle(3), 0}),
                    cf::InvalidInput);
  const Instance easy(ConflictGraph::path(3), 2, ValuationModel::uniform(3));
  BOOST_CHECK_THROW(cf::build_reduction(easy, cf::ISInstance{ConflictGraph::cycle(3), 1}),
                    cf::BaseAdmitsEf1);
  const cf::Reduction r = cf::build_reduction(base, cf::ISInstance{ConflictGraph::path(3), 2});
  BOOST_CHECK_THROW(cf::yes_certificate(r.spec, GoodSet(3, {0, 1})), cf::InvalidInput);
  BOOST_CHECK_THROW(cf::yes_certificate(r.spec, GoodSet(3, {0})), cf::InvalidInput);
  BOOST_CHECK_NO_THROW(cf::yes_certificate(r.spec, GoodSet(3, {0, 2})));
}

BOOST_AUTO_TEST_SUITE_END()
